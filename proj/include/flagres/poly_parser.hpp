#pragma once

#include <string>

#include "flagres/multipoly.hpp"

namespace flagres {

/// Parse an arithmetic expression over Q(i) and the given variables into a
/// polynomial. Grammar: +, -, *, ^ (nonnegative integer powers),
/// parentheses, the imaginary unit `i`, integer literals, and `/` with a
/// nonzero constant divisor. Examples: "-z0*z3", "(1/2)*y^2", "i*x*y",
/// "(x-y)*y + z*(x-z)". Throws ParseError with line/column on bad input.
MultiPoly parse_polynomial(const std::string& text, const VarSet& vars);

/// Parse a Q(i) scalar ("9/2", "-i", "1/2+3/4*i", ...). Accepts everything
/// GaussRational::str() produces.
GaussRational parse_gauss(const std::string& text);

}  // namespace flagres
