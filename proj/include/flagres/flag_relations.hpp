#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagres/residue.hpp"

namespace flagres {

/// One-dimensional singular component: curve degree, the disc meeting it,
/// the intersection point on the disc, and the residues computed there.
struct CurveComponent {
    std::string name;
    int degree = 1;  // deg(Z)
    Disc disc;
    std::array<GaussRational, 2> point;
    std::map<ResidueSymbol, GaussRational> residues;
};

/// Isolated singular point; contributes exactly zero to every flag sum.
struct IsolatedPoint {
    std::string name;
    std::vector<GaussRational> coords;
};

/// Inputs of the blow-up relation: distribution degrees, tangency orders
/// along the exceptional divisor, curve degree and Euler characteristic.
struct FlagRelationInput {
    BigInt d1;
    BigInt d2;
    BigInt l1;
    BigInt l2;
    BigInt degC;
    BigInt chi;
};

/// Coefficient of the hyperplane class in c1(N12): 1 + d1 - d2.
BigInt c1_n12_coefficient(const BigInt& d1, const BigInt& d2);

/// Global flag-residue sum (1 + d1 - d2) * sum over curve components of
/// deg(Z) * Res_sym(Z). Isolated points contribute zero by the
/// isolated-point vanishing rule. Throws MissingResidue when a component
/// lacks the requested symbol.
GaussRational flag_residue_sum(const BigInt& d1, const BigInt& d2,
                               const std::vector<CurveComponent>& components,
                               const std::vector<IsolatedPoint>& isolated, ResidueSymbol sym);

/// Residual of the blow-up relation:
///   degC * [ (1+d1-d2)(2 - l2(2+3l2)) + (2l2-l1)(-3l2(2+4l2-d2)+2+d2) ]
///   + chi * (2l2-l1)(l2(2+3l2) - 2).
/// Zero exactly when the relation holds; equals the integral of
/// c1(N12~)c2(N2~) over the blown-up P^3.
BigInt blowup_relation_residual(const FlagRelationInput& in);

/// Same residual with an exact rational Euler characteristic.
Rational blowup_relation_residual(const BigInt& d1, const BigInt& d2, const BigInt& l1, const BigInt& l2,
                                  const BigInt& degC, const Rational& chi);

/// For 2*l2 = l1 the relation is independent of chi and forces d2 = d1 + 1
/// whenever 2 - l2(2+3l2) != 0 and degC >= 1.
struct DegreeShiftCheck {
    bool residual_zero = false;
    bool degree_shift_holds = false;   // d2 == d1 + 1
    bool degenerate_factor = false;    // 2 - l2(2+3l2) == 0: no force
    bool confirmed() const { return residual_zero && degree_shift_holds; }
};
DegreeShiftCheck consecutive_degree_check(const FlagRelationInput& in);  // PreconditionViolated if 2*l2 != l1

/// Euler characteristic solved from the relation (2*l2 != l1 and
/// 2 - l2(2+3l2) != 0 required):
///   chi = degC * [ (1+d1-d2)/(2l2-l1) + (2+d2-3l2(2+4l2-d2))/(2-l2(2+3l2)) ].
Rational euler_characteristic_from_relation(const BigInt& d1, const BigInt& d2, const BigInt& l1,
                                            const BigInt& l2, const BigInt& degC);

}  // namespace flagres
