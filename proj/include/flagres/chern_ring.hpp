#pragma once

#include <array>
#include <map>
#include <optional>

#include "flagres/multipoly.hpp"

namespace flagres {

/// Monomial in the degree-1 generators of the blow-up intersection symbols:
/// H = pullback of the hyperplane class, E = class of the exceptional
/// divisor, T = class pulled back from c1(TC) on the exceptional divisor.
struct ChernMonomial {
    std::array<int, 3> e{0, 0, 0};  // exponents of H, E, T

    int degree() const { return e[0] + e[1] + e[2]; }

    friend bool operator==(const ChernMonomial& a, const ChernMonomial& b) { return a.e == b.e; }
    friend bool operator<(const ChernMonomial& a, const ChernMonomial& b) { return a.e < b.e; }
};

std::string to_string(const ChernMonomial& m);

/// Formal sum of generator monomials with coefficients polynomial in the
/// relation parameters d1, d2, l1, l2, degC, chi.
class ChernExpr {
public:
    static const VarSet& params();

    ChernExpr() = default;
    static ChernExpr term(ChernMonomial m, MultiPoly coeff);
    /// Coefficient given as an expression over params(), e.g. "1+d1-d2".
    static ChernExpr term(ChernMonomial m, const std::string& coeff_expr);

    const std::map<ChernMonomial, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Common graded degree of the stored monomials; -1 for the zero
    /// expression, nullopt when degrees are mixed.
    std::optional<int> pure_degree() const;

    void add_term(const ChernMonomial& m, const MultiPoly& coeff);

    ChernExpr operator-() const;
    friend ChernExpr operator+(const ChernExpr& a, const ChernExpr& b);
    friend ChernExpr operator-(const ChernExpr& a, const ChernExpr& b);
    friend ChernExpr operator*(const ChernExpr& a, const ChernExpr& b);
    ChernExpr& operator+=(const ChernExpr& o) { return *this = *this + o; }
    ChernExpr& operator-=(const ChernExpr& o) { return *this = *this - o; }
    ChernExpr& operator*=(const ChernExpr& o) { return *this = *this * o; }

    friend bool operator==(const ChernExpr& a, const ChernExpr& b) { return a.terms_ == b.terms_; }

private:
    std::map<ChernMonomial, MultiPoly> terms_;
};

std::string to_string(const ChernExpr& a);

/// Substitute numeric values for a subset of the parameters in every
/// coefficient.
ChernExpr specialize(const ChernExpr& a, const std::map<std::string, BigInt>& values);

ChernExpr chern_h();
ChernExpr chern_e();
ChernExpr chern_t();

// Chern classes of the twisted pullbacks F~i = pull(Fi) (x) [E]^{l_i} and of
// the pieces entering the normal-sheaf computation on the blow-up.
ChernExpr c1_f1_tilde();             // (1-d1)H + l1 E
ChernExpr c1_f2_tilde();             // (2-d2)H + 2l2 E
ChernExpr c1_n12_tilde();            // (1+d1-d2)H + (2l2-l1)E = c1(F2~) - c1(F1~)
ChernExpr c1_n2_tilde_printed();     // (2+d2)H - (2l2+l1)E  (normative here)
ChernExpr c1_n2_tilde_adjunction();  // c1(TP3~) - c1(F2~) = (2+d2)H - (1+2l2)E
ChernExpr c1_tangent_blowup();       // 4H - E
ChernExpr c2_tangent_blowup();       // 6H^2 - E^2 - TE
ChernExpr c2_f2_tilde();             // (2+d2^2-degC)H^2 + l2(2-d2)HE + l2^2 E^2

/// c2(N2~), both as stated and recomputed via
/// c2(TP3~) - c2(F2~) - c1(F2~)c1(N2~) with either c1(N2~) variant.
struct NormalC2 {
    ChernExpr stated;             // degC H^2 + (-3l2d2-2l2-d2+2)HE - TE + (3l2^2+2l2-1)E^2
    ChernExpr from_printed_c1;
    ChernExpr from_adjunction_c1;
};
NormalC2 c2_n2_tilde();

/// Linear extension of the intersection numbers on degree-3 monomials:
/// H^3 -> 1, H^2E -> 0, HE^2 -> -degC, E^3 -> chi - 4 degC, HTE -> 0,
/// TE^2 -> chi. Monomials not of degree 3 throw NotTopDegree; monomials
/// outside the table throw UnknownMonomial, or map to zero when permissive.
MultiPoly integrate(const ChernExpr& a, bool permissive = false);

/// The intersection table itself (for reporting).
const std::map<ChernMonomial, MultiPoly>& integration_table();

/// Closed form of the blow-up relation residual over the parameters.
MultiPoly blowup_relation_closed_form();

/// integrate(c1(N12~) * c2(N2~)), the left side of the relation.
MultiPoly blowup_relation_integrated(bool permissive = false);

/// integrated minus closed form; the zero polynomial when the symbolic
/// derivation is consistent.
MultiPoly verify_blowup_relation(bool permissive = false);

}  // namespace flagres
