#include "qkp/textio.hpp"

#include <cctype>

namespace qkp {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[nodiscard]] bool done() {
        skip_ws();
        return i >= s.size();
    }
    [[nodiscard]] char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what +
                                    " in '" + s + "'");
    }
    long integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
    Rational rational() {
        long num = integer();
        if (accept('/')) {
            long den = integer();
            return Rational(num, den);
        }
        return Rational(num);
    }
};

long exponent_suffix(Cursor& c) {
    if (c.accept('^')) return c.integer();
    return 1;
}

}  // namespace

XLaurent parse_xlaurent(const std::string& text) {
    Cursor c{text};
    XLaurent out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.accept('-')) sign = -1;
        else if (c.accept('+')) sign = 1;
        else if (!first) c.fail("expected '+' or '-' between terms");
        first = false;

        Rational coeff(sign);
        long exp = 0;
        bool saw_factor = false;
        do {
            char p = c.peek();
            if (p == 'x') {
                c.accept('x');
                exp += exponent_suffix(c);
            } else if (std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= c.rational();
            } else {
                c.fail("expected factor");
            }
            saw_factor = true;
        } while (c.accept('*'));
        if (!saw_factor) c.fail("empty term");
        out.add_term(exp, coeff);
    }
    return out;
}

DPoly parse_dpoly(const std::string& text) {
    Cursor c{text};
    DPoly out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.accept('-')) sign = -1;
        else if (c.accept('+')) sign = 1;
        else if (!first) c.fail("expected '+' or '-' between terms");
        first = false;

        Rational coeff(sign);
        DPoly::Monomial mono;
        do {
            char p = c.peek();
            if (p == 'u') {
                c.accept('u');
                long fn = c.integer();
                int der = 0;
                while (c.peek() == '\'') {
                    c.accept('\'');
                    ++der;
                }
                long e = 1;
                if (c.accept('^')) {
                    if (c.accept('(')) {  // derivative marker u<i>^(k)
                        der = static_cast<int>(c.integer());
                        if (!c.accept(')')) c.fail("expected ')'");
                        if (c.accept('^')) e = c.integer();
                    } else {
                        e = c.integer();
                    }
                }
                if (e < 1) c.fail("exponent must be positive");
                mono[DPoly::Gen{static_cast<int>(fn), der}] += static_cast<int>(e);
            } else if (std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= c.rational();
            } else {
                c.fail("expected factor");
            }
        } while (c.accept('*'));
        out.add_term(mono, coeff);
    }
    return out;
}

}  // namespace qkp
