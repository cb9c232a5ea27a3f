#include "flagres/poly_parser.hpp"

#include <cctype>

namespace flagres {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarSet& vars) : text_(text), vars_(vars) {}

    MultiPoly run() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        MultiPoly p = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    MultiPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        MultiPoly p = parse_term();
        if (negate) p = -p;
        while (true) {
            skip_ws();
            if (peek() == '+') {
                advance();
                p += parse_term();
            } else if (peek() == '-') {
                advance();
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                advance();
                p *= parse_factor();
            } else if (peek() == '/') {
                advance();
                skip_ws();
                const int l = line_, c = col_;
                MultiPoly d = parse_factor();
                if (!d.is_constant()) throw ParseError("divisor must be constant", l, c);
                const GaussRational value = d.constant_value();
                if (value.is_zero()) throw ParseError("division by zero", l, c);
                p = (GaussRational(1) / value) * p;
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            unsigned long e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > 9999) fail("exponent too large");
                advance();
            }
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            advance();
            MultiPoly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            return MultiPoly::constant(vars_, GaussRational(Rational(BigInt(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const int l = line_, cl = col_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name += peek();
                advance();
            }
            if (name == "i") return MultiPoly::constant(vars_, GaussRational::i());
            if (auto idx = vars_.index(name)) return MultiPoly::variable(vars_, *idx);
            throw ParseError("unknown variable '" + name + "'", l, cl);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    const VarSet& vars_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const VarSet& vars) {
    return Parser(text, vars).run();
}

GaussRational parse_gauss(const std::string& text) {
    return parse_polynomial(text, VarSet()).constant_value();
}

}  // namespace flagres
