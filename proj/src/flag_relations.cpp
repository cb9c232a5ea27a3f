#include "flagres/flag_relations.hpp"

namespace flagres {

BigInt c1_n12_coefficient(const BigInt& d1, const BigInt& d2) {
    return 1 + d1 - d2;
}

GaussRational flag_residue_sum(const BigInt& d1, const BigInt& d2,
                               const std::vector<CurveComponent>& components,
                               const std::vector<IsolatedPoint>& isolated, ResidueSymbol sym) {
    (void)isolated;  // isolated points contribute exactly zero
    GaussRational sum;
    for (const auto& comp : components) {
        const auto it = comp.residues.find(sym);
        if (it == comp.residues.end())
            throw MissingResidue("component '" + comp.name + "' carries no residue for " + to_string(sym));
        sum += GaussRational(Rational(BigInt(comp.degree))) * it->second;
    }
    return GaussRational(Rational(c1_n12_coefficient(d1, d2))) * sum;
}

namespace {

// Shared pieces of the blow-up relation.
struct RelationParts {
    BigInt curve_coeff;   // (1+d1-d2)(2 - A) + (2l2-l1)w2, with A = l2(2+3l2)
    BigInt chi_coeff;     // (2l2-l1)(A - 2)
    BigInt two_minus_a;   // 2 - A
    BigInt v;             // 2l2 - l1
};

RelationParts relation_parts(const BigInt& d1, const BigInt& d2, const BigInt& l1, const BigInt& l2) {
    RelationParts parts;
    const BigInt a = l2 * (2 + 3 * l2);
    parts.two_minus_a = 2 - a;
    parts.v = 2 * l2 - l1;
    const BigInt w2 = -3 * l2 * (2 + 4 * l2 - d2) + 2 + d2;
    parts.curve_coeff = (1 + d1 - d2) * parts.two_minus_a + parts.v * w2;
    parts.chi_coeff = parts.v * (a - 2);
    return parts;
}

void check_degC(const BigInt& degC) {
    if (degC < 1) throw PreconditionViolated("degC must be >= 1");
}

}  // namespace

BigInt blowup_relation_residual(const FlagRelationInput& in) {
    check_degC(in.degC);
    const RelationParts parts = relation_parts(in.d1, in.d2, in.l1, in.l2);
    return in.degC * parts.curve_coeff + in.chi * parts.chi_coeff;
}

Rational blowup_relation_residual(const BigInt& d1, const BigInt& d2, const BigInt& l1, const BigInt& l2,
                                  const BigInt& degC, const Rational& chi) {
    check_degC(degC);
    const RelationParts parts = relation_parts(d1, d2, l1, l2);
    return Rational(degC * parts.curve_coeff) + chi * Rational(parts.chi_coeff);
}

DegreeShiftCheck consecutive_degree_check(const FlagRelationInput& in) {
    if (2 * in.l2 != in.l1) throw PreconditionViolated("consecutive-degree check needs 2*l2 = l1");
    check_degC(in.degC);
    const RelationParts parts = relation_parts(in.d1, in.d2, in.l1, in.l2);
    DegreeShiftCheck check;
    check.residual_zero = in.degC * parts.curve_coeff == 0;  // chi coefficient vanishes with v = 0
    check.degree_shift_holds = in.d2 == in.d1 + 1;
    check.degenerate_factor = parts.two_minus_a == 0;
    return check;
}

Rational euler_characteristic_from_relation(const BigInt& d1, const BigInt& d2, const BigInt& l1,
                                            const BigInt& l2, const BigInt& degC) {
    check_degC(degC);
    const BigInt a = l2 * (2 + 3 * l2);
    const BigInt v = 2 * l2 - l1;
    if (v == 0) throw PreconditionViolated("chi is undetermined when 2*l2 = l1");
    if (2 - a == 0) throw PreconditionViolated("chi is undetermined when l2(2+3l2) = 2");
    const BigInt w2 = -3 * l2 * (2 + 4 * l2 - d2) + 2 + d2;
    return Rational(degC) * (Rational(1 + d1 - d2) / Rational(v) + Rational(w2) / Rational(2 - a));
}

}  // namespace flagres
