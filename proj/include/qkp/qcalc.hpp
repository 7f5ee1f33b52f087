#pragma once

#include "qkp/rational.hpp"

#include <map>
#include <vector>

namespace qkp {

/// Validated deformation parameter. A rational q is admissible iff the
/// q-integers (k)_q never vanish, which for rationals excludes exactly
/// q in {0, 1, -1}.
class QValue {
public:
    explicit QValue(Rational q) : q_(std::move(q)) {
        if (q_.is_zero() || q_ == Rational(1) || q_ == Rational(-1))
            throw std::invalid_argument("QValue: q must differ from 0, 1 and -1");
    }
    static QValue parse(const std::string& text) { return QValue(Rational::parse(text)); }

    [[nodiscard]] const Rational& value() const { return q_; }
    [[nodiscard]] QValue reciprocal() const { return QValue(q_.inverse()); }

    friend bool operator==(const QValue& a, const QValue& b) { return a.q_ == b.q_; }
    friend bool operator!=(const QValue& a, const QValue& b) { return a.q_ != b.q_; }

private:
    Rational q_;
};

/// (n)_q = (q^n - 1)/(q - 1) for any integer n.
Rational qint(long n, const QValue& q);

/// (k)_q! = (1)_q (2)_q ... (k)_q.
Rational qfactorial(long k, const QValue& q);

/// Bracket q-binomial [m k]_q = (m)_q (m-1)_q ... (m-k+1)_q / (k)_q!,
/// defined for any integer m (the form the negative-order Leibniz rule needs).
Rational qbinom_bracket(long m, long k, const QValue& q);

/// q-Pochhammer (a;q)_k = prod_{s=0}^{k-1} (1 - a q^s).
Rational qpochhammer(const Rational& a, const QValue& q, long k);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); requires 0 <= k <= n.
Rational qbinom_gauss(long n, long k, const QValue& q);

/// Checks C(n,g)*C(n+r-g,m) = sum_{a+b=g+m, a,b>=0} C(b,g)*C(n,b)*C(r,a)
/// exactly. This is the combinatorial identity behind symbol-product
/// associativity.
bool check_binomial_convolution(long n, long r, long gamma, long mu);

/// First N+1 power-series coefficients of
///   exp_q(y) = sum_k (1-q)^k y^k / (q;q)_k.
std::vector<Rational> qexp_coeffs(long N, const QValue& q);

/// First N+1 coefficients of exp_{1/q}(-y).
std::vector<Rational> qexp_recip_coeffs(long N, const QValue& q);

/// Dense univariate polynomial over Rational, used internally for the
/// Gaussian-binomial-as-polynomial cross checks (q stays a concrete rational
/// everywhere else).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) { if (!c.is_zero()) coeffs_ = {std::move(c)}; }
    static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational eval(const Rational& x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact division, throws if the remainder is nonzero.
    [[nodiscard]] UniPoly divide_exact(const UniPoly& d) const;

private:
    void trim() { while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back(); }
    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies q^i
};

/// Gaussian binomial as a polynomial in q (exact), e.g. (4,2) -> 1+q+2q^2+q^3+q^4.
UniPoly qbinom_gauss_poly(long n, long k);

}  // namespace qkp
