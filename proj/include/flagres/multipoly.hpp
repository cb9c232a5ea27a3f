#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagres/errors.hpp"
#include "flagres/gauss_rational.hpp"

namespace flagres {

/// Ordered set of variable names; the order is fixed at construction and
/// defines exponent-vector layout and printing order.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t idx) const { return names_[idx]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> index(const std::string& name) const;
    size_t index_or_throw(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

/// Exponent vector aligned with a VarSet.
using Monomial = std::vector<std::uint32_t>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

/// Sparse multivariate polynomial over Q(i). Stored terms never carry a zero
/// coefficient; the zero polynomial has no terms.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSet vars, GaussRational value);
    static MultiPoly variable(const VarSet& vars, size_t idx);
    static MultiPoly variable(const VarSet& vars, const std::string& name);

    const VarSet& vars() const { return vars_; }
    const std::map<Monomial, GaussRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (valid for any polynomial; the whole value when is_constant()).
    GaussRational constant_value() const;

    int total_degree() const;            // -1 for the zero polynomial
    int degree_in(size_t var) const;     // -1 for the zero polynomial

    void add_term(Monomial m, const GaussRational& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussRational& c, const MultiPoly& p);

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    VarSet vars_;
    std::map<Monomial, GaussRational> terms_;
};

/// Formal partial derivative.
MultiPoly partial(const MultiPoly& p, size_t var);
MultiPoly partial(const MultiPoly& p, const std::string& var);

/// Exact evaluation; every variable of the VarSet is bound positionally.
GaussRational eval(const MultiPoly& p, std::span<const GaussRational> point);
/// Evaluation by name; every variable occurring in p must be bound
/// (UnboundVariable otherwise), and every binding must name a variable of
/// the VarSet (UnknownVariable otherwise).
GaussRational eval(const MultiPoly& p, const std::map<std::string, GaussRational>& point);

/// Substitute a constant or a polynomial (over the same VarSet) for one
/// variable. The VarSet is preserved; use drop_variable to shrink it.
MultiPoly substitute(const MultiPoly& p, size_t var, const GaussRational& value);
MultiPoly substitute(const MultiPoly& p, size_t var, const MultiPoly& value);
MultiPoly substitute(const MultiPoly& p, const std::string& var, const GaussRational& value);
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value);

/// Simultaneous substitution z_i := images[i]; all images live over `target`.
MultiPoly compose(const MultiPoly& p, const VarSet& target, std::span<const MultiPoly> images);

/// Remove a variable that no term uses (degree_in(var) <= 0).
MultiPoly drop_variable(const MultiPoly& p, size_t var);

/// True when every term has the same total degree (the zero polynomial is
/// homogeneous of any degree). degree_out receives that degree, -1 for zero.
bool is_homogeneous(const MultiPoly& p, int* degree_out = nullptr);

/// Quotient p/q when the division is exact, nullopt otherwise.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Determinant by fraction-free (Bareiss) elimination; entries share a VarSet.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester resultant of two polynomials over a two-variable VarSet,
/// eliminating the named variable. Vanishes at the kept-variable coordinates
/// of common zeros.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, size_t eliminate);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& eliminate);

/// Monic gcd of two effectively univariate polynomials in the same variable.
MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q);

struct RootsResult {
    std::vector<GaussRational> roots;      // distinct Q(i) roots
    std::vector<MultiPoly> unresolved;     // factors whose roots are not in Q(i)
                                           // (or resisted the divisor search)
    bool complete() const { return unresolved.empty(); }
};

/// All Q(i) roots of an effectively univariate polynomial. Factors without
/// Q(i) roots are reported unresolved, never silently dropped.
RootsResult roots_in_qi(const MultiPoly& p);

/// Canonical text form, graded-lex descending; parse_polynomial round-trips it.
std::string to_string(const MultiPoly& p);

}  // namespace flagres
