#pragma once

#include <vector>

#include "flagres/gauss_rational.hpp"
#include "flagres/rational.hpp"

namespace flagres {

/// Gaussian integer a + b*i. Support layer for rational-root searches over
/// Q(i); arithmetic only, no canonical associate is enforced.
struct GaussInt {
    BigInt re;
    BigInt im;

    GaussInt() : re(0), im(0) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    BigInt norm() const { return re * re + im * im; }
    GaussInt conj() const { return GaussInt(re, -im); }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re + b.re, a.im + b.im);
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re - b.re, a.im - b.im);
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussRational to_rational() const { return GaussRational(Rational(re), Rational(im)); }
};

/// Exact quotient a/b when b divides a in Z[i].
bool gauss_divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient = nullptr);

/// All divisors of g up to units (one representative per associate class).
/// Factors the norm by trial division; returns false when the norm resists
/// factoring within `effort` trial divisors (caller treats the result as
/// unresolved rather than wrong).
bool gauss_divisors(const GaussInt& g, std::vector<GaussInt>& out, long long effort = 2'000'000);

}  // namespace flagres
