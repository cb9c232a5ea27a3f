#include "flagres/rational.hpp"

namespace flagres {

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(const std::string& text) {
    int col = 1;
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, 1, col); };

    auto read_int = [&](bool allow_sign) -> BigInt {
        std::string digits;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            digits += text[pos++];
            ++col;
        }
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++col;
        }
        if (pos == start) throw fail("expected digits");
        return BigInt(digits);
    };

    BigInt n = read_int(true);
    BigInt d = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        ++col;
        d = read_int(false);
    }
    if (pos != text.size()) throw fail("trailing characters in rational literal");
    return Rational(std::move(n), std::move(d));
}

bool rational_sqrt(const Rational& x, Rational& out) {
    if (x.sign() < 0) return false;
    if (x.is_zero()) {
        out = Rational(0);
        return true;
    }
    const BigInt sn = boost::multiprecision::sqrt(x.num());
    const BigInt sd = boost::multiprecision::sqrt(x.den());
    if (sn * sn != x.num() || sd * sd != x.den()) return false;
    out = Rational(sn, sd);
    return true;
}

}  // namespace flagres
