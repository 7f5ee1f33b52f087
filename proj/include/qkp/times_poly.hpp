#pragma once

#include "qkp/qcalc.hpp"
#include "qkp/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qkp {

/// Polynomial in time variables t_1 .. t_N over Rational. The arity N is
/// fixed per instance; all exponents are >= 0.
class TimesPoly {
public:
    using Monomial = std::vector<int>;  // length == arity

    explicit TimesPoly(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("TimesPoly: arity must be positive");
    }
    static TimesPoly constant(int arity, Rational c) {
        TimesPoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(Monomial(static_cast<std::size_t>(arity), 0), std::move(c));
        return p;
    }
    static TimesPoly variable(int arity, int index, Rational coeff = Rational(1));

    [[nodiscard]] int arity() const { return arity_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    friend TimesPoly operator+(const TimesPoly& a, const TimesPoly& b);
    friend TimesPoly operator-(const TimesPoly& a, const TimesPoly& b);
    friend TimesPoly operator*(const TimesPoly& a, const TimesPoly& b);
    TimesPoly operator-() const;
    friend TimesPoly operator*(const Rational& c, const TimesPoly& f);
    friend bool operator==(const TimesPoly& a, const TimesPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TimesPoly& a, const TimesPoly& b) { return !(a == b); }

    /// Partial derivative with respect to t_{index+1} (0-based index).
    [[nodiscard]] TimesPoly derivative(int index) const;

    /// Substitutes t_k -> t_k + shift[k] for constant shifts (exact expansion).
    [[nodiscard]] TimesPoly shifted(const std::vector<Rational>& shift) const;

    [[nodiscard]] std::string str() const;

private:
    int arity_;
    std::map<Monomial, Rational> terms_;
};

/// Hirota bilinear derivative D^multi a.b: apply (d/ds_j)^{multi_j} to
/// a(t+s) b(t-s) and set s = 0. Computed by the alternating Leibniz sum.
TimesPoly hirota_apply(const TimesPoly& a, const TimesPoly& b, const std::vector<int>& multi);

/// Elementary Schur polynomial p_j of arity N, defined by
/// exp(sum_k t_k z^k) = sum_j p_j z^j.
TimesPoly schur_p(int j, int arity);

/// Schur polynomial of a partition via the Jacobi-Trudi determinant
/// det(p_{lambda_i - i + j}).
TimesPoly schur_partition(const std::vector<int>& partition, int arity);

/// (D_1^4 + 3 D_2^2 - 4 D_1 D_3) tau.tau — the bilinear KP residual.
/// Requires arity >= 3.
TimesPoly kp_hirota_residual(const TimesPoly& tau);

/// tau(t + [x]_q) with [x]_q = ((1-q)^k x^k / (k (1-q^k)))_k truncated at the
/// arity of tau. Exact for polynomial tau.
TimesPoly qtau_shift(const TimesPoly& tau, const Rational& x, const QValue& q);

}  // namespace qkp
