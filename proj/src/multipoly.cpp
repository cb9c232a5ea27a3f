#include "flagres/multipoly.hpp"

#include <algorithm>
#include <set>

#include "flagres/gauss_integer.hpp"

namespace flagres {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw Error("duplicate variable name: " + names_[i]);
}

std::optional<size_t> VarSet::index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

size_t VarSet::index_or_throw(const std::string& name) const {
    if (auto idx = index(name)) return *idx;
    throw UnknownVariable(name);
}

MultiPoly MultiPoly::constant(VarSet vars, GaussRational value) {
    MultiPoly p(std::move(vars));
    if (!value.is_zero()) p.terms_.emplace(Monomial(p.vars_.size(), 0), std::move(value));
    return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, size_t idx) {
    if (idx >= vars.size()) throw UnknownVariable("variable index " + std::to_string(idx));
    MultiPoly p(vars);
    Monomial m(vars.size(), 0);
    m[idx] = 1;
    p.terms_.emplace(std::move(m), GaussRational(1));
    return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, const std::string& name) {
    return variable(vars, vars.index_or_throw(name));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

GaussRational MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? GaussRational() : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

int MultiPoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

void MultiPoly::add_term(Monomial m, const GaussRational& c) {
    if (m.size() != vars_.size()) throw Error("monomial arity does not match variable set");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.vars_ == b.vars_)) throw VarSetMismatch();
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.vars_ == b.vars_)) throw VarSetMismatch();
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.vars_ == b.vars_)) throw VarSetMismatch();
    MultiPoly out(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const GaussRational& c, const MultiPoly& p) {
    MultiPoly out(p.vars_);
    if (c.is_zero()) return out;
    for (const auto& [m, co] : p.terms_) out.terms_.emplace(m, c * co);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = MultiPoly::constant(vars_, GaussRational(1));
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
}

MultiPoly partial(const MultiPoly& p, size_t var) {
    if (var >= p.vars().size()) throw UnknownVariable("variable index " + std::to_string(var));
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial mm = m;
        mm[var] -= 1;
        out.add_term(std::move(mm), GaussRational(Rational(BigInt(m[var]))) * c);
    }
    return out;
}

MultiPoly partial(const MultiPoly& p, const std::string& var) {
    return partial(p, p.vars().index_or_throw(var));
}

namespace {

GaussRational pow_gr(const GaussRational& x, std::uint32_t e) {
    GaussRational out(1);
    for (std::uint32_t k = 0; k < e; ++k) out *= x;
    return out;
}

}  // namespace

GaussRational eval(const MultiPoly& p, std::span<const GaussRational> point) {
    if (point.size() != p.vars().size()) throw Error("evaluation point arity does not match variable set");
    GaussRational out;
    for (const auto& [m, c] : p.terms()) {
        GaussRational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= pow_gr(point[i], m[i]);
        out += t;
    }
    return out;
}

GaussRational eval(const MultiPoly& p, const std::map<std::string, GaussRational>& point) {
    std::vector<GaussRational> values(p.vars().size());
    std::vector<bool> bound(p.vars().size(), false);
    for (const auto& [name, value] : point) {
        const size_t idx = p.vars().index_or_throw(name);
        values[idx] = value;
        bound[idx] = true;
    }
    for (const auto& [m, c] : p.terms())
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && !bound[i]) throw UnboundVariable(p.vars().name(i));
    return eval(p, values);
}

MultiPoly substitute(const MultiPoly& p, size_t var, const GaussRational& value) {
    if (var >= p.vars().size()) throw UnknownVariable("variable index " + std::to_string(var));
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(std::move(mm), c * pow_gr(value, m[var]));
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, size_t var, const MultiPoly& value) {
    if (var >= p.vars().size()) throw UnknownVariable("variable index " + std::to_string(var));
    if (!(value.vars() == p.vars())) throw VarSetMismatch("substituted value lives over a different variable set");
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        mm[var] = 0;
        MultiPoly t(p.vars());
        t.add_term(std::move(mm), c);
        out += t * value.pow(m[var]);
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const GaussRational& value) {
    return substitute(p, p.vars().index_or_throw(var), value);
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value) {
    return substitute(p, p.vars().index_or_throw(var), value);
}

MultiPoly compose(const MultiPoly& p, const VarSet& target, std::span<const MultiPoly> images) {
    if (images.size() != p.vars().size()) throw VarSetMismatch("one image per source variable required");
    for (const auto& im : images)
        if (!(im.vars() == target)) throw VarSetMismatch("images must live over the target variable set");
    MultiPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= images[i].pow(m[i]);
        out += t;
    }
    return out;
}

MultiPoly drop_variable(const MultiPoly& p, size_t var) {
    if (var >= p.vars().size()) throw UnknownVariable("variable index " + std::to_string(var));
    if (p.degree_in(var) > 0) throw Error("cannot drop variable " + p.vars().name(var) + ": it still occurs");
    std::vector<std::string> names;
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (i != var) names.push_back(p.vars().name(i));
    MultiPoly out{VarSet(std::move(names))};
    for (const auto& [m, c] : p.terms()) {
        Monomial mm;
        for (size_t i = 0; i < m.size(); ++i)
            if (i != var) mm.push_back(m[i]);
        out.add_term(std::move(mm), c);
    }
    return out;
}

bool is_homogeneous(const MultiPoly& p, int* degree_out) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) {
        const int dm = monomial_degree(m);
        if (d == -1) d = dm;
        else if (dm != d) return false;
    }
    if (degree_out) *degree_out = d;
    return true;
}

namespace {

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = monomial_degree(a);
    const int db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::map<Monomial, GaussRational>::const_iterator leading_term(const MultiPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (graded_lex_less(best->first, it->first)) best = it;
    return best;
}

}  // namespace

std::optional<MultiPoly> try_divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (!(p.vars() == q.vars())) throw VarSetMismatch();
    if (q.is_zero()) return std::nullopt;
    MultiPoly r = p;
    MultiPoly quot(p.vars());
    const auto lq = leading_term(q);
    const Monomial qm = lq->first;
    const GaussRational qc = lq->second;
    while (!r.is_zero()) {
        const auto lr = leading_term(r);
        Monomial diff(qm.size());
        for (size_t i = 0; i < qm.size(); ++i) {
            if (lr->first[i] < qm[i]) return std::nullopt;
            diff[i] = lr->first[i] - qm[i];
        }
        MultiPoly t(p.vars());
        t.add_term(std::move(diff), lr->second / qc);
        quot += t;
        r -= t * q;
    }
    return quot;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const size_t n = m.size();
    if (n == 0) throw Error("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("matrix is not square");
    const VarSet vs = m[0][0].vars();

    int sign = 1;
    MultiPoly prev = MultiPoly::constant(vs, GaussRational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return MultiPoly(vs);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                auto q = try_divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
                if (!q) throw Error("internal: non-exact division in fraction-free elimination");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(vs);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

// Coefficient of var^k, with the var-exponent zeroed out (same VarSet).
MultiPoly coeff_of(const MultiPoly& p, size_t var, std::uint32_t k) {
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != k) continue;
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(std::move(mm), c);
    }
    return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t eliminate) {
    if (p.vars().size() != 2 || q.vars().size() != 2) throw NotBivariate();
    if (!(p.vars() == q.vars())) throw VarSetMismatch();
    if (eliminate >= 2) throw UnknownVariable("variable index " + std::to_string(eliminate));
    if (p.is_zero() || q.is_zero()) return MultiPoly(p.vars());

    const int m = p.degree_in(eliminate);
    const int n = q.degree_in(eliminate);
    if (m == 0 && n == 0) return MultiPoly::constant(p.vars(), GaussRational(1));
    if (m == 0) return p.pow(static_cast<unsigned>(n));
    if (n == 0) return q.pow(static_cast<unsigned>(m));

    std::vector<MultiPoly> pc, qc;
    for (int k = 0; k <= m; ++k) pc.push_back(coeff_of(p, eliminate, static_cast<std::uint32_t>(k)));
    for (int k = 0; k <= n; ++k) qc.push_back(coeff_of(q, eliminate, static_cast<std::uint32_t>(k)));

    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, MultiPoly(p.vars())));
    // Rows of q first: res_x(x, x-1) = 1 under this orientation.
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = qc[static_cast<size_t>(n - j)];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + j)] = pc[static_cast<size_t>(m - j)];

    return bareiss_determinant(std::move(syl));
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& eliminate) {
    return resultant(p, q, p.vars().index_or_throw(eliminate));
}

namespace {

// Index of the unique variable occurring in p; nullopt for constants.
std::optional<size_t> active_var(const MultiPoly& p) {
    std::optional<size_t> v;
    for (size_t i = 0; i < p.vars().size(); ++i) {
        if (p.degree_in(i) > 0) {
            if (v) throw Error("polynomial is not univariate");
            v = i;
        }
    }
    return v;
}

std::vector<GaussRational> dense_coeffs(const MultiPoly& p, size_t var) {
    std::vector<GaussRational> c(static_cast<size_t>(p.degree_in(var)) + 1);
    for (const auto& [m, co] : p.terms()) c[m[var]] = co;
    return c;
}

MultiPoly from_dense(const VarSet& vs, size_t var, std::span<const GaussRational> c) {
    MultiPoly out(vs);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Monomial m(vs.size(), 0);
        m[var] = static_cast<std::uint32_t>(k);
        out.add_term(std::move(m), c[k]);
    }
    return out;
}

void trim_dense(std::vector<GaussRational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Remainder of a by b (univariate dense, b nonzero).
std::vector<GaussRational> dense_mod(std::vector<GaussRational> a, const std::vector<GaussRational>& b) {
    while (a.size() >= b.size()) {
        const GaussRational f = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        trim_dense(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q) {
    if (!(p.vars() == q.vars())) throw VarSetMismatch();
    auto monic = [](const MultiPoly& f, size_t var) {
        auto c = dense_coeffs(f, var);
        const GaussRational lead = c.back();
        for (auto& x : c) x /= lead;
        return from_dense(f.vars(), var, c);
    };
    if (p.is_zero() && q.is_zero()) return p;
    std::optional<size_t> vp = p.is_zero() ? std::nullopt : active_var(p);
    std::optional<size_t> vq = q.is_zero() ? std::nullopt : active_var(q);
    if (vp && vq && *vp != *vq) throw Error("gcd operands use different variables");
    if (!vp && !p.is_zero()) return MultiPoly::constant(p.vars(), GaussRational(1));
    if (!vq && !q.is_zero()) return MultiPoly::constant(p.vars(), GaussRational(1));
    const size_t var = vp ? *vp : *vq;
    if (p.is_zero()) return monic(q, var);
    if (q.is_zero()) return monic(p, var);

    std::vector<GaussRational> a = dense_coeffs(p, var);
    std::vector<GaussRational> b = dense_coeffs(q, var);
    while (!b.empty()) {
        auto r = dense_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() == 1) return MultiPoly::constant(p.vars(), GaussRational(1));
    const GaussRational lead = a.back();
    for (auto& x : a) x /= lead;
    return from_dense(p.vars(), var, a);
}

namespace {

GaussRational horner(const std::vector<GaussRational>& c, const GaussRational& x) {
    GaussRational v;
    for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

// Divide by (t - r); quotient overwrites c. Caller guarantees r is a root.
void deflate(std::vector<GaussRational>& c, const GaussRational& r) {
    std::vector<GaussRational> b(c.size() - 1);
    GaussRational carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        b[k] = carry;
        carry = c[k] + r * carry;
    }
    c = std::move(b);
}

// Gaussian-integer coefficient vector proportional to c.
std::vector<GaussInt> to_gauss_int(const std::vector<GaussRational>& c) {
    BigInt lcm = 1;
    auto fold = [&lcm](const BigInt& d) { lcm = lcm / boost::multiprecision::gcd(lcm, d) * d; };
    for (const auto& x : c) {
        fold(x.re().den());
        fold(x.im().den());
    }
    std::vector<GaussInt> out;
    BigInt content = 0;
    for (const auto& x : c) {
        const Rational re = x.re() * Rational(lcm);
        const Rational im = x.im() * Rational(lcm);
        out.emplace_back(re.num(), im.num());
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(re.num()));
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(im.num()));
    }
    if (content > 1)
        for (auto& g : out) {
            g.re /= content;
            g.im /= content;
        }
    return out;
}

}  // namespace

RootsResult roots_in_qi(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial are undefined");
    const auto var_opt = active_var(p);
    RootsResult result;
    if (!var_opt) return result;  // nonzero constant
    const size_t var = *var_opt;

    std::vector<GaussRational> c = dense_coeffs(p, var);
    if (c.front().is_zero()) {
        result.roots.push_back(GaussRational());
        while (c.front().is_zero()) c.erase(c.begin());
    }

    const GaussRational unit_i = GaussRational::i();
    while (true) {
        const size_t deg = c.size() - 1;
        if (deg == 0) break;
        if (deg == 1) {
            result.roots.push_back(-c[0] / c[1]);
            break;
        }
        if (deg == 2) {
            const GaussRational disc = c[1] * c[1] - GaussRational(4) * c[2] * c[0];
            GaussRational s;
            if (!gauss_sqrt(disc, s)) {
                result.unresolved.push_back(from_dense(p.vars(), var, c));
                break;
            }
            const GaussRational twoa = GaussRational(2) * c[2];
            result.roots.push_back((-c[1] + s) / twoa);
            if (!s.is_zero()) result.roots.push_back((-c[1] - s) / twoa);
            break;
        }

        // Rational-root search over Z[i]: a root u/v in lowest terms has
        // u | c0 and v | c_deg after clearing denominators.
        const std::vector<GaussInt> ic = to_gauss_int(c);
        std::vector<GaussInt> du, dv;
        if (!gauss_divisors(ic.front(), du) || !gauss_divisors(ic.back(), dv)) {
            result.unresolved.push_back(from_dense(p.vars(), var, c));
            break;
        }
        auto cmp = [](const GaussRational& a, const GaussRational& b) { return lex_less(a, b); };
        std::set<GaussRational, decltype(cmp)> candidates(cmp);
        for (const auto& u : du) {
            for (const auto& v : dv) {
                GaussRational r = u.to_rational() / v.to_rational();
                for (int k = 0; k < 4; ++k) {
                    candidates.insert(r);
                    r *= unit_i;
                }
            }
        }
        bool found = false;
        for (const auto& r : candidates) {
            while (c.size() > 1 && horner(c, r).is_zero()) {
                if (std::find(result.roots.begin(), result.roots.end(), r) == result.roots.end())
                    result.roots.push_back(r);
                deflate(c, r);
                found = true;
            }
        }
        if (!found) {
            result.unresolved.push_back(from_dense(p.vars(), var, c));
            break;
        }
        if (c.size() == 1) break;
        // Degree may now be <= 2; loop once more for the closed forms.
        if (c.size() - 1 > 2) {
            // No further Q(i) roots exist after a complete divisor search.
            result.unresolved.push_back(from_dense(p.vars(), var, c));
            break;
        }
    }

    std::sort(result.roots.begin(), result.roots.end(), lex_less);
    result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
    return result;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";

    std::vector<std::pair<Monomial, GaussRational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return graded_lex_less(b.first, a.first);  // descending
    });

    auto monomial_str = [&p](const Monomial& m) {
        std::string s;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += p.vars().name(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    };
    auto rational_factor = [](const Rational& r) {
        return r.is_integer() ? r.str() : "(" + r.str() + ")";
    };

    std::string out;
    for (const auto& [m, c] : terms) {
        const std::string mon = monomial_str(m);
        bool negative = false;
        std::string body;
        if (c.is_real()) {
            negative = c.re().sign() < 0;
            const Rational mag = c.re().abs();
            if (mon.empty()) body = rational_factor(mag);
            else if (mag.is_one()) body = mon;
            else body = rational_factor(mag) + "*" + mon;
        } else if (c.re().is_zero()) {
            negative = c.im().sign() < 0;
            const Rational mag = c.im().abs();
            body = mag.is_one() ? "i" : rational_factor(mag) + "*i";
            if (!mon.empty()) body += "*" + mon;
        } else {
            body = "(" + c.str() + ")";
            if (!mon.empty()) body += "*" + mon;
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        out += body;
    }
    return out;
}

}  // namespace flagres
