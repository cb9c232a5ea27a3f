#include "flagres/chern_ring.hpp"

#include "flagres/poly_parser.hpp"

namespace flagres {

std::string to_string(const ChernMonomial& m) {
    static const char* names[3] = {"H", "E", "T"};
    std::string s;
    for (int g = 0; g < 3; ++g) {
        for (int k = 0; k < m.e[g]; ++k) s += names[g];
    }
    return s.empty() ? "1" : s;
}

const VarSet& ChernExpr::params() {
    static const VarSet vs({"d1", "d2", "l1", "l2", "degC", "chi"});
    return vs;
}

ChernExpr ChernExpr::term(ChernMonomial m, MultiPoly coeff) {
    ChernExpr out;
    out.add_term(m, coeff);
    return out;
}

ChernExpr ChernExpr::term(ChernMonomial m, const std::string& coeff_expr) {
    return term(m, parse_polynomial(coeff_expr, params()));
}

std::optional<int> ChernExpr::pure_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1) d = m.degree();
        else if (m.degree() != d) return std::nullopt;
    }
    return d;
}

void ChernExpr::add_term(const ChernMonomial& m, const MultiPoly& coeff) {
    if (!(coeff.vars() == params())) throw VarSetMismatch("coefficients live over the parameter ring");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChernExpr ChernExpr::operator-() const {
    ChernExpr out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ChernExpr operator+(const ChernExpr& a, const ChernExpr& b) {
    ChernExpr out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

ChernExpr operator-(const ChernExpr& a, const ChernExpr& b) {
    ChernExpr out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

ChernExpr operator*(const ChernExpr& a, const ChernExpr& b) {
    ChernExpr out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            ChernMonomial m;
            for (int g = 0; g < 3; ++g) m.e[g] = ma.e[g] + mb.e[g];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string to_string(const ChernExpr& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : a.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + to_string(m);
    }
    return s;
}

ChernExpr specialize(const ChernExpr& a, const std::map<std::string, BigInt>& values) {
    ChernExpr out;
    for (const auto& [m, c] : a.terms()) {
        MultiPoly coeff = c;
        for (const auto& [name, value] : values)
            coeff = substitute(coeff, name, GaussRational(Rational(value)));
        out.add_term(m, coeff);
    }
    return out;
}

namespace {

ChernMonomial mono(int h, int e, int t) { return ChernMonomial{{h, e, t}}; }

ChernExpr linear(const std::string& h_coeff, const std::string& e_coeff) {
    return ChernExpr::term(mono(1, 0, 0), h_coeff) + ChernExpr::term(mono(0, 1, 0), e_coeff);
}

}  // namespace

ChernExpr chern_h() { return ChernExpr::term(mono(1, 0, 0), "1"); }
ChernExpr chern_e() { return ChernExpr::term(mono(0, 1, 0), "1"); }
ChernExpr chern_t() { return ChernExpr::term(mono(0, 0, 1), "1"); }

ChernExpr c1_f1_tilde() { return linear("1-d1", "l1"); }
ChernExpr c1_f2_tilde() { return linear("2-d2", "2*l2"); }
ChernExpr c1_n12_tilde() { return linear("1+d1-d2", "2*l2-l1"); }
ChernExpr c1_n2_tilde_printed() { return linear("2+d2", "-(2*l2+l1)"); }
ChernExpr c1_n2_tilde_adjunction() { return c1_tangent_blowup() - c1_f2_tilde(); }
ChernExpr c1_tangent_blowup() { return linear("4", "-1"); }

ChernExpr c2_tangent_blowup() {
    return ChernExpr::term(mono(2, 0, 0), "6") + ChernExpr::term(mono(0, 2, 0), "-1") +
           ChernExpr::term(mono(0, 1, 1), "-1");
}

ChernExpr c2_f2_tilde() {
    return ChernExpr::term(mono(2, 0, 0), "2+d2^2-degC") + ChernExpr::term(mono(1, 1, 0), "l2*(2-d2)") +
           ChernExpr::term(mono(0, 2, 0), "l2^2");
}

NormalC2 c2_n2_tilde() {
    NormalC2 out;
    out.stated = ChernExpr::term(mono(2, 0, 0), "degC") +
                 ChernExpr::term(mono(1, 1, 0), "-3*l2*d2-2*l2-d2+2") +
                 ChernExpr::term(mono(0, 1, 1), "-1") +
                 ChernExpr::term(mono(0, 2, 0), "3*l2^2+2*l2-1");
    const ChernExpr base = c2_tangent_blowup() - c2_f2_tilde();
    out.from_printed_c1 = base - c1_f2_tilde() * c1_n2_tilde_printed();
    out.from_adjunction_c1 = base - c1_f2_tilde() * c1_n2_tilde_adjunction();
    return out;
}

const std::map<ChernMonomial, MultiPoly>& integration_table() {
    static const std::map<ChernMonomial, MultiPoly> table = [] {
        const VarSet& ps = ChernExpr::params();
        std::map<ChernMonomial, MultiPoly> t;
        t.emplace(mono(3, 0, 0), parse_polynomial("1", ps));
        t.emplace(mono(2, 1, 0), MultiPoly(ps));
        t.emplace(mono(1, 2, 0), parse_polynomial("-degC", ps));
        t.emplace(mono(0, 3, 0), parse_polynomial("chi-4*degC", ps));
        t.emplace(mono(1, 1, 1), MultiPoly(ps));
        t.emplace(mono(0, 2, 1), parse_polynomial("chi", ps));
        return t;
    }();
    return table;
}

MultiPoly integrate(const ChernExpr& a, bool permissive) {
    const auto& table = integration_table();
    MultiPoly out(ChernExpr::params());
    for (const auto& [m, c] : a.terms()) {
        if (m.degree() != 3)
            throw NotTopDegree("cannot integrate " + to_string(m) + ": graded degree is " +
                               std::to_string(m.degree()) + ", not 3");
        const auto it = table.find(m);
        if (it == table.end()) {
            if (permissive) continue;
            throw UnknownMonomial("no intersection number for " + to_string(m));
        }
        out += c * it->second;
    }
    return out;
}

MultiPoly blowup_relation_closed_form() {
    const VarSet& ps = ChernExpr::params();
    const MultiPoly bracket = parse_polynomial(
        "(1+d1-d2)*(-l2*(2+3*l2)+2) + (2*l2-l1)*(-3*l2*(2+4*l2-d2)+2+d2)", ps);
    const MultiPoly chi_part = parse_polynomial("chi*(2*l2-l1)*(l2*(2+3*l2)-2)", ps);
    return parse_polynomial("degC", ps) * bracket + chi_part;
}

MultiPoly blowup_relation_integrated(bool permissive) {
    return integrate(c1_n12_tilde() * c2_n2_tilde().stated, permissive);
}

MultiPoly verify_blowup_relation(bool permissive) {
    return blowup_relation_integrated(permissive) - blowup_relation_closed_form();
}

}  // namespace flagres
