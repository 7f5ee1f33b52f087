#include "qkp/qcalc.hpp"

namespace qkp {

Rational qint(long n, const QValue& q) {
    return (q.value().pow(n) - Rational(1)) / (q.value() - Rational(1));
}

Rational qfactorial(long k, const QValue& q) {
    if (k < 0) throw std::invalid_argument("qfactorial: negative k");
    Rational out(1);
    for (long i = 1; i <= k; ++i) out *= qint(i, q);
    return out;
}

Rational qbinom_bracket(long m, long k, const QValue& q) {
    if (k < 0) throw std::invalid_argument("qbinom_bracket: negative k");
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= qint(m - i, q);
    return out / qfactorial(k, q);
}

Rational qpochhammer(const Rational& a, const QValue& q, long k) {
    if (k < 0) throw std::invalid_argument("qpochhammer: negative k");
    Rational out(1);
    for (long s = 0; s < k; ++s) out *= Rational(1) - a * q.value().pow(s);
    return out;
}

Rational qbinom_gauss(long n, long k, const QValue& q) {
    if (k < 0 || n < 0) throw std::invalid_argument("qbinom_gauss: negative argument");
    if (k > n) throw std::invalid_argument("qbinom_gauss: k > n");
    const Rational& qq = q.value();
    return qpochhammer(qq, q, n) / (qpochhammer(qq, q, k) * qpochhammer(qq, q, n - k));
}

bool check_binomial_convolution(long n, long r, long gamma, long mu) {
    if (gamma < 0 || mu < 0) throw std::invalid_argument("check_binomial_convolution: negative gamma/mu");
    Rational lhs = binom_generalized(n, gamma) * binom_generalized(n + r - gamma, mu);
    Rational rhs(0);
    for (long alpha = 0; alpha <= gamma + mu; ++alpha) {
        long beta = gamma + mu - alpha;
        rhs += binom_generalized(beta, gamma) * binom_generalized(n, beta) * binom_generalized(r, alpha);
    }
    return lhs == rhs;
}

std::vector<Rational> qexp_coeffs(long N, const QValue& q) {
    if (N < 0) throw std::invalid_argument("qexp_coeffs: negative order");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    Rational one_minus_q = Rational(1) - q.value();
    Rational num(1), den(1);
    out.push_back(Rational(1));
    for (long k = 1; k <= N; ++k) {
        num *= one_minus_q;
        den *= Rational(1) - q.value().pow(k);  // (q;q)_k built incrementally
        out.push_back(num / den);
    }
    return out;
}

std::vector<Rational> qexp_recip_coeffs(long N, const QValue& q) {
    std::vector<Rational> base = qexp_coeffs(N, q.reciprocal());
    for (long k = 1; k <= N; k += 2) base[static_cast<std::size_t>(k)] = -base[static_cast<std::size_t>(k)];
    return base;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational out(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(rem.size() >= d.coeffs_.size() ? rem.size() - d.coeffs_.size() + 1 : 0, Rational(0));
    while (rem.size() >= d.coeffs_.size() && !rem.empty()) {
        std::size_t shift = rem.size() - d.coeffs_.size();
        Rational factor = rem.back() / d.coeffs_.back();
        quot[shift] = factor;
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i) rem[shift + i] -= factor * d.coeffs_[i];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    if (!rem.empty()) throw std::domain_error("UniPoly: inexact division");
    return UniPoly(std::move(quot));
}

UniPoly qbinom_gauss_poly(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom_gauss_poly: need 0 <= k <= n");
    // prod_{j=n-k+1}^{n} (1-q^j) / prod_{j=1}^{k} (1-q^j), assembled as exact
    // polynomial division.
    auto one_minus_qpow = [](long j) {
        std::vector<Rational> c(static_cast<std::size_t>(j) + 1, Rational(0));
        c[0] = Rational(1);
        c[static_cast<std::size_t>(j)] = Rational(-1);
        return UniPoly(std::move(c));
    };
    UniPoly num(Rational(1)), den(Rational(1));
    for (long j = n - k + 1; j <= n; ++j) num = num * one_minus_qpow(j);
    for (long j = 1; j <= k; ++j) den = den * one_minus_qpow(j);
    return num.divide_exact(den);
}

}  // namespace qkp
