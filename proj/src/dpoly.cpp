#include "qkp/dpoly.hpp"

#include <sstream>

namespace qkp {

DPoly operator+(const DPoly& a, const DPoly& b) {
    DPoly out = a;
    out += b;
    return out;
}

DPoly operator-(const DPoly& a, const DPoly& b) {
    DPoly out = a;
    out -= b;
    return out;
}

DPoly DPoly::operator-() const {
    DPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

DPoly& DPoly::operator+=(const DPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DPoly operator*(const DPoly& a, const DPoly& b) {
    DPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            DPoly::Monomial m = ma;
            for (const auto& [g, e] : mb) m[g] += e;
            out.add_term(m, ca * cb);
        }
    return out;
}

DPoly operator*(const Rational& c, const DPoly& f) {
    DPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, c * v);
    return out;
}

int DPoly::max_fn_index() const {
    int top = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [g, e] : m) top = std::max(top, g.first);
    return top;
}

namespace {

std::string gen_str(const DPoly::Gen& g) {
    std::ostringstream os;
    os << "u" << g.first;
    if (g.second > 0 && g.second <= 3)
        for (int i = 0; i < g.second; ++i) os << "'";
    else if (g.second > 3)
        os << "^(" << g.second << ")";
    return os.str();
}

}  // namespace

std::string DPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (m.empty()) {
            os << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.str();
            printed = true;
        }
        for (const auto& [g, e] : m) {
            if (printed) os << "*";
            os << gen_str(g);
            if (e != 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

DPoly ddx(const DPoly& f) {
    DPoly out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [g, e] : m) {
            DPoly::Monomial d = m;
            if (e == 1) d.erase(g);
            else d[g] = e - 1;
            d[DPoly::Gen{g.first, g.second + 1}] += 1;
            out.add_term(d, Rational(e) * c);
        }
    }
    return out;
}

DPoly ddx_iter(const DPoly& f, int k) {
    DPoly out = f;
    for (int i = 0; i < k; ++i) out = ddx(out);
    return out;
}

}  // namespace qkp
