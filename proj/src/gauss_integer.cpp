#include "flagres/gauss_integer.hpp"

#include <map>

namespace flagres {

bool gauss_divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient) {
    if (b.is_zero()) return false;
    const BigInt n = b.norm();
    const GaussInt t = a * b.conj();  // a/b = t/n
    if (t.re % n != 0 || t.im % n != 0) return false;
    if (quotient) *quotient = GaussInt(t.re / n, t.im / n);
    return true;
}

namespace {

// Multiplicity of the Gaussian prime pi in g.
int gauss_valuation(GaussInt g, const GaussInt& pi) {
    int e = 0;
    GaussInt q;
    while (gauss_divides(pi, g, &q)) {
        g = q;
        ++e;
    }
    return e;
}

bool factor_norm(BigInt n, std::map<BigInt, int>& factors, long long effort) {
    long long steps = 0;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (++steps > effort) return false;
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) ++factors[n];
    return true;
}

// A Gaussian prime above the split rational prime p (p = a^2 + b^2).
bool prime_above(const BigInt& p, GaussInt& out, long long effort) {
    long long steps = 0;
    for (BigInt a = 1; a * a <= p; ++a) {
        if (++steps > effort) return false;
        const BigInt b2 = p - a * a;
        const BigInt b = boost::multiprecision::sqrt(b2);
        if (b * b == b2) {
            out = GaussInt(a, b);
            return true;
        }
    }
    return false;
}

}  // namespace

bool gauss_divisors(const GaussInt& g, std::vector<GaussInt>& out, long long effort) {
    out.clear();
    if (g.is_zero()) return false;

    std::map<BigInt, int> norm_factors;
    if (!factor_norm(g.norm(), norm_factors, effort)) return false;

    // Gaussian prime factorization of g (representatives up to units).
    std::vector<std::pair<GaussInt, int>> primes;
    for (const auto& [p, a] : norm_factors) {
        if (p == 2) {
            primes.emplace_back(GaussInt(1, 1), a);
        } else if (p % 4 == 3) {
            primes.emplace_back(GaussInt(p, 0), a / 2);
        } else {
            GaussInt pi;
            if (!prime_above(p, pi, effort)) return false;
            const int e1 = gauss_valuation(g, pi);
            const int e2 = a - e1;
            if (e1 > 0) primes.emplace_back(pi, e1);
            if (e2 > 0) primes.emplace_back(pi.conj(), e2);
        }
    }

    out.push_back(GaussInt(1, 0));
    for (const auto& [pi, e] : primes) {
        const size_t base = out.size();
        GaussInt power = pi;
        for (int k = 1; k <= e; ++k) {
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
            power = power * pi;
        }
    }
    return true;
}

}  // namespace flagres
