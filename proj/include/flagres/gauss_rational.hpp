#pragma once

#include <string>
#include <utility>

#include "flagres/rational.hpp"

namespace flagres {

/// Element of Q(i): re + im*i with exact rational parts. i*i = -1.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero in Q(i)");
        const Rational n = b.norm();
        const GaussRational t = a * b.conj();
        return GaussRational(t.re_ / n, t.im_ / n);
    }

    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Reduced-fraction rendering, zero parts omitted: "0", "-9/2", "i",
    /// "3/4*i", "1/2-3/4*i". parse_gauss() round-trips every output.
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

/// Exact square root in Q(i), when one exists.
bool gauss_sqrt(const GaussRational& x, GaussRational& out);

/// Lexicographic (re, im) order; used for sorting and deduplicating points,
/// not a field order.
bool lex_less(const GaussRational& a, const GaussRational& b);

}  // namespace flagres
