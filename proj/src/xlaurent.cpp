#include "qkp/xlaurent.hpp"

#include <sstream>

namespace qkp {

long XLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("XLaurent: min_exp of zero polynomial");
    return terms_.begin()->first;
}

long XLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("XLaurent: max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

XLaurent operator+(const XLaurent& a, const XLaurent& b) {
    XLaurent out = a;
    out += b;
    return out;
}

XLaurent operator-(const XLaurent& a, const XLaurent& b) {
    XLaurent out = a;
    out -= b;
    return out;
}

XLaurent XLaurent::operator-() const {
    XLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    XLaurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

XLaurent operator*(const Rational& c, const XLaurent& f) {
    XLaurent out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : f.terms_) out.terms_.emplace(e, c * v);
    return out;
}

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << "x";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

XLaurent ddx(const XLaurent& f) {
    XLaurent out;
    for (const auto& [e, c] : f.terms())
        if (e != 0) out.add_term(e - 1, Rational(e) * c);
    return out;
}

XLaurent dq(const XLaurent& f, const QValue& q) {
    XLaurent out;
    for (const auto& [e, c] : f.terms())
        if (e != 0) out.add_term(e - 1, qint(e, q) * c);
    return out;
}

XLaurent tau_scale(const XLaurent& f, const QValue& q, long k) {
    XLaurent out;
    for (const auto& [e, c] : f.terms()) out.add_term(e, q.value().pow(k * e) * c);
    return out;
}

XLaurent dq_inverse_monomial(const XLaurent& f, const QValue& q) {
    XLaurent out;
    for (const auto& [e, c] : f.terms()) {
        if (e == -1)
            throw std::domain_error("dq_inverse_monomial: x^-1 term is not integrable");
        out.add_term(e + 1, c / qint(e + 1, q));
    }
    return out;
}

}  // namespace qkp
