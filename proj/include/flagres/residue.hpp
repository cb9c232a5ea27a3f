#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagres/projective.hpp"

namespace flagres {

/// The two Chern monomials admissible for the planar Grothendieck symbol:
/// c1^2 = trace^2 and c2 = det of the 2x2 Jacobian.
enum class ResidueSymbol { c1_squared, c2 };

std::string to_string(ResidueSymbol s);
ResidueSymbol parse_symbol(const std::string& text);  // "c1^2" | "c2"

/// Coordinate-aligned transversal disc {fixed_var = value} inside chart U_chart.
struct Disc {
    int chart;
    std::string fixed_var;
    GaussRational value;
};

/// Planar 1-form a du + b dw over a two-variable set.
struct PlanarForm {
    MultiPoly a;
    MultiPoly b;
};

/// Planar vector field p d/du + q d/dw.
struct PlanarVF {
    MultiPoly p;
    MultiPoly q;
};

struct Jacobian2 {
    MultiPoly m00, m01, m10, m11;

    MultiPoly trace() const { return m00 + m11; }
    MultiPoly det() const { return m00 * m11 - m01 * m10; }
};

/// Substitute the disc equation into the coefficients and drop the d(fixed)
/// term; the result lives in the two surviving chart variables.
PlanarForm restrict_form_to_disc(const AffineForm& f, const Disc& d);

/// b d/du - a d/dw; contracts with the input form to zero identically.
PlanarVF dual_planar_field(const PlanarForm& f);

/// a*p + b*q — the contraction of a planar form with a planar field.
MultiPoly contract(const PlanarForm& f, const PlanarVF& v);

/// Row-ordered partials [[p_u, p_w], [q_u, q_w]].
Jacobian2 jacobian(const PlanarVF& v);

/// A univariate factor of the solution locus whose roots lie outside Q(i)
/// (or resisted the divisor search). `at_w` is set when the factor describes
/// u-coordinates on a fixed line w = at_w.
struct UnresolvedLocus {
    MultiPoly factor;
    std::optional<GaussRational> at_w;
};

struct PlanarSolve {
    std::vector<std::array<GaussRational, 2>> points;  // sorted lexicographically
    std::vector<UnresolvedLocus> unresolved;
    bool complete() const { return unresolved.empty(); }
};

/// All common zeros of (p, q) in Q(i)^2 by resultant elimination and
/// back-substitution. Throws DegenerateSystem when the zero set has a
/// positive-dimensional component (the pair shares a nonconstant factor).
PlanarSolve singular_points(const PlanarVF& v);

/// Grothendieck residue of a nondegenerate singular point: trace(J)^2/det(J)
/// for c1^2, det(J)/det(J) = 1 for c2.
GaussRational grothendieck_residue(ResidueSymbol sym, const PlanarVF& v,
                                   const std::array<GaussRational, 2>& point);

}  // namespace flagres
