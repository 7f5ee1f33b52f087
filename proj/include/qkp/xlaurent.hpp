#pragma once

#include "qkp/qcalc.hpp"
#include "qkp/rational.hpp"

#include <map>
#include <string>

namespace qkp {

/// Laurent polynomial in x with exact rational coefficients.
/// No zero coefficients are ever stored.
class XLaurent {
public:
    XLaurent() = default;
    explicit XLaurent(Rational constant) { set(0, std::move(constant)); }
    explicit XLaurent(long constant) { set(0, Rational(constant)); }

    static XLaurent monomial(long exp, Rational coeff = Rational(1)) {
        XLaurent f;
        f.set(exp, std::move(coeff));
        return f;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<long, Rational>& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] long min_exp() const;  // throws on zero polynomial
    [[nodiscard]] long max_exp() const;

    void set(long exp, Rational coeff) {
        if (coeff.is_zero()) terms_.erase(exp);
        else terms_[exp] = std::move(coeff);
    }
    void add_term(long exp, const Rational& coeff) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(exp, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend XLaurent operator+(const XLaurent& a, const XLaurent& b);
    friend XLaurent operator-(const XLaurent& a, const XLaurent& b);
    friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
    XLaurent operator-() const;
    friend XLaurent operator*(const Rational& c, const XLaurent& f);
    friend bool operator==(const XLaurent& a, const XLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XLaurent& a, const XLaurent& b) { return !(a == b); }

    XLaurent& operator+=(const XLaurent& o);
    XLaurent& operator-=(const XLaurent& o);

    [[nodiscard]] std::string str() const;

private:
    std::map<long, Rational> terms_;
};

/// Exact x-derivative: x^n -> n x^(n-1).
XLaurent ddx(const XLaurent& f);

/// Jackson q-derivative: x^n -> (n)_q x^(n-1) for all integer n.
XLaurent dq(const XLaurent& f, const QValue& q);

/// Scaling operator tau^k: f(x) -> f(q^k x), i.e. x^n -> q^(kn) x^n.
XLaurent tau_scale(const XLaurent& f, const QValue& q, long k);

/// Right inverse of dq on the monomial basis: x^n -> x^(n+1)/(n+1)_q.
/// Throws if f carries an x^-1 term (non-integrable monomial).
XLaurent dq_inverse_monomial(const XLaurent& f, const QValue& q);

}  // namespace qkp
