#include "qaw/parse.hpp"

#include "qaw/zsym.hpp"

#include <cctype>

namespace qaw {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, bool allow_x) : text_(text), allow_x_(allow_x) {}

    XPoly parse() {
        XPoly value = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    XPoly expr() {
        XPoly acc = product();
        for (;;) {
            if (accept('+')) {
                acc += product();
            } else if (accept('-')) {
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    XPoly product() {
        XPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const XPoly divisor = unary();
                if (divisor.degree() > 0) {
                    throw ParseError("division by a polynomial in x", at);
                }
                if (divisor.is_zero()) {
                    throw ParseError("division by zero", at);
                }
                acc *= divisor.leading().inverse();
            } else {
                return acc;
            }
        }
    }

    XPoly unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    int exponent() {
        skip_ws();
        const bool paren = accept('(');
        skip_ws();
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) {
                fail("exponent too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected integer exponent");
        }
        if (paren && !accept(')')) {
            fail("expected ')'");
        }
        return static_cast<int>(negative ? -value : value);
    }

    XPoly power() {
        const std::size_t at = pos_;
        XPoly base = atom();
        if (!accept('^')) {
            return base;
        }
        const int e = exponent();
        if (e < 0) {
            if (base.degree() > 0) {
                throw ParseError("negative power of a polynomial in x", at);
            }
            if (base.is_zero()) {
                throw ParseError("negative power of zero", at);
            }
            return XPoly(base.leading().pow(e));
        }
        XPoly out(1);
        for (int k = 0; k < e; ++k) {
            out = out * base;
        }
        return out;
    }

    XPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            XPoly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            return XPoly(Scalar(Rational(std::string(text_.substr(start, pos_ - start)))));
        }
        ++pos_;
        switch (c) {
            case 't': return XPoly(Scalar::t());
            case 'u': return XPoly(Scalar::u());
            case 'x':
                if (allow_x_) {
                    return XPoly::x();
                }
                break;
            default: break;
        }
        --pos_;
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

}  // namespace

XPoly parse_expression(std::string_view text, bool allow_x) {
    return Parser(text, allow_x).parse();
}

XPoly XPoly::parse(std::string_view text) { return parse_expression(text, true); }

Scalar Scalar::parse(std::string_view text) {
    const XPoly p = parse_expression(text, false);
    return p.is_zero() ? Scalar() : p.leading();
}

}  // namespace qaw
