#pragma once

#include <stdexcept>
#include <string>

namespace flagres {

// Base for all library errors. Subclasses exist so callers can catch the
// exact failure named in each operation's contract.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

struct VarSetMismatch : Error {
    explicit VarSetMismatch(const std::string& msg = "variable sets differ") : Error(msg) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name) : Error("unknown variable: " + name) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

struct NotBivariate : Error {
    explicit NotBivariate(const std::string& msg = "operands must live in exactly two variables") : Error(msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg = "zero polynomial") : Error(msg) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg = "ambient dimensions differ") : Error(msg) {}
};

struct BadChartIndex : Error {
    explicit BadChartIndex(const std::string& msg = "chart index out of range") : Error(msg) {}
};

struct InvalidDistribution : Error {
    explicit InvalidDistribution(const std::string& msg) : Error(msg) {}
};

struct InvalidFlag : Error {
    explicit InvalidFlag(const std::string& msg) : Error(msg) {}
};

struct DegenerateSystem : Error {
    explicit DegenerateSystem(const std::string& msg = "zero set on the disc is not isolated") : Error(msg) {}
};

struct DegenerateSingularity : Error {
    explicit DegenerateSingularity(const std::string& msg = "Jacobian is singular at the point") : Error(msg) {}
};

struct NotSingular : Error {
    explicit NotSingular(const std::string& msg = "point is not a singular point of the field") : Error(msg) {}
};

struct MissingResidue : Error {
    explicit MissingResidue(const std::string& msg = "component carries no residue for the requested symbol") : Error(msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

struct NotTopDegree : Error {
    explicit NotTopDegree(const std::string& msg = "expression is not of top graded degree") : Error(msg) {}
};

struct UnknownMonomial : Error {
    explicit UnknownMonomial(const std::string& msg) : Error(msg) {}
};

}  // namespace flagres
