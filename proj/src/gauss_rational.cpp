#include "flagres/gauss_rational.hpp"

namespace flagres {

namespace {

// Imaginary part rendered without its sign; the caller supplies the sign.
std::string imag_magnitude(const Rational& im) {
    const Rational a = im.abs();
    if (a.is_one()) return "i";
    return a.str() + "*i";
}

}  // namespace

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag_magnitude(im_);
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag_magnitude(im_);
}

bool gauss_sqrt(const GaussRational& x, GaussRational& out) {
    if (x.is_zero()) {
        out = GaussRational();
        return true;
    }
    if (x.im().is_zero()) {
        Rational s;
        if (x.re().sign() > 0) {
            if (!rational_sqrt(x.re(), s)) return false;
            out = GaussRational(s);
            return true;
        }
        if (!rational_sqrt(-x.re(), s)) return false;
        out = GaussRational(Rational(0), s);
        return true;
    }
    // s = a + b*i with a^2 - b^2 = re, 2ab = im. Then a^2 + b^2 = |x| must be
    // rational, and a^2 = (re + |x|) / 2 a rational square.
    Rational r;
    if (!rational_sqrt(x.norm(), r)) return false;
    Rational a;
    if (!rational_sqrt((x.re() + r) / Rational(2), a)) return false;
    if (a.is_zero()) return false;  // im != 0 requires a != 0
    const Rational b = x.im() / (Rational(2) * a);
    out = GaussRational(a, b);
    return out * out == x;
}

bool lex_less(const GaussRational& a, const GaussRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

}  // namespace flagres
