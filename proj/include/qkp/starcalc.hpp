#pragma once

#include "qkp/qcalc.hpp"
#include "qkp/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qkp {

/// Laurent polynomial in the phase-space pair (x, p) with exact rational
/// coefficients. Keys are (x-exponent, p-exponent).
class PhaseSymbol {
public:
    using Key = std::pair<long, long>;

    PhaseSymbol() = default;
    explicit PhaseSymbol(Rational c) { add(0, 0, std::move(c)); }
    static PhaseSymbol monomial(long xe, long pe, Rational c = Rational(1)) {
        PhaseSymbol f;
        f.add(xe, pe, std::move(c));
        return f;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(long xe, long pe) const {
        auto it = terms_.find(Key{xe, pe});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] long min_x_exp() const;
    [[nodiscard]] long max_x_exp() const;

    void add(long xe, long pe, const Rational& c);

    friend PhaseSymbol operator+(const PhaseSymbol& a, const PhaseSymbol& b);
    friend PhaseSymbol operator-(const PhaseSymbol& a, const PhaseSymbol& b);
    friend PhaseSymbol operator*(const PhaseSymbol& a, const PhaseSymbol& b);  // pointwise
    PhaseSymbol operator-() const;
    friend PhaseSymbol operator*(const Rational& c, const PhaseSymbol& f);
    friend bool operator==(const PhaseSymbol& a, const PhaseSymbol& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PhaseSymbol& a, const PhaseSymbol& b) { return !(a == b); }

    [[nodiscard]] PhaseSymbol dx() const;  // d/dx
    [[nodiscard]] PhaseSymbol dp() const;  // d/dp

    [[nodiscard]] std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

/// Moyal star product
///   f*g = sum_s kappa^s/s! sum_j (-1)^j C(s,j) (dx^j dp^{s-j} f)(dx^{s-j} dp^j g).
/// Exact; requires polynomial x-dependence so the s-sum terminates.
PhaseSymbol moyal_star(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa);

/// (f*g - g*f)/(2 kappa), computed directly as the odd-order half of the
/// star sum; antisymmetric by construction and Poisson at kappa -> 0.
PhaseSymbol moyal_bracket(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa);

/// Classical bracket {f,g} = dp(f) dx(g) - dx(f) dp(g).
PhaseSymbol poisson_dkp(const PhaseSymbol& f, const PhaseSymbol& g);

/// One-sided symbol product f o_k g = sum_n kappa^n/n! dp^n(f) dx^n(g)
/// (p plays the derivative symbol).
PhaseSymbol circ_product(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa);

/// Commutator bracket (1/kappa)(f o_k g - g o_k f).
PhaseSymbol circ_commutator_bracket(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa);

/// Odd-derivative comparison bracket
///   sum_n kappa^{2n+1}/(2n+1)! [dp^{2n+1}f dx^{2n+1}g - dp^{2n+1}g dx^{2n+1}f].
PhaseSymbol bracket_prime_kappa(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa);

/// Normal-ordered q-plane product: x^m p^n * x^a p^b = q^{-na} x^{m+a} p^{n+b}.
/// Exact on full Laurent support.
PhaseSymbol qplane_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q);

/// Scaling-operator star products realized by their exact monomial actions.
/// Standard ordering: phase q^{n a}; antistandard: q^{-m b}; Weyl: the
/// symmetric half-scaling q^{(na - mb)/2}, which requires q to be the square
/// of a rational.
PhaseSymbol qstandard_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q);
PhaseSymbol qantistandard_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q);
PhaseSymbol qweyl_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q);

/// Jackson-type derivatives on normal-ordered q-plane symbols:
/// D_x(x^m p^n) = (m)_q x^{m-1} p^n, D_p(x^m p^n) = q^m (n)_q x^m p^{n-1}
/// (the q^m records commuting the x-block past the p-derivative).
PhaseSymbol qplane_dx(const PhaseSymbol& f, const QValue& q);
PhaseSymbol qplane_dp(const PhaseSymbol& f, const QValue& q);

/// Verifies D_x p = q^-1 p D_x and D_p x = q x D_p through the q-plane
/// ordering model on the monomial grid |m|,|n| <= 3.
bool qplane_compat_check(const QValue& q);

/// Finite combination of torus monomials z^m zeta^n.
class TorusElement {
public:
    using Key = std::pair<long, long>;  // (z-exponent m, zeta-exponent n)

    TorusElement() = default;
    static TorusElement monomial(long m, long n, Rational c = Rational(1)) {
        TorusElement t;
        t.add(m, n, std::move(c));
        return t;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }

    void add(long m, long n, const Rational& c);

    friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const Rational& c, const TorusElement& f);
    friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

    [[nodiscard]] std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

/// Formal power series in the bracket parameter lambda with TorusElement
/// coefficients, truncated at a fixed order.
class FormalLambdaSeries {
public:
    explicit FormalLambdaSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("FormalLambdaSeries: negative order");
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const TorusElement& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void add(int k, const TorusElement& t);

    [[nodiscard]] bool is_zero() const;

    friend FormalLambdaSeries operator+(const FormalLambdaSeries& a, const FormalLambdaSeries& b);
    friend FormalLambdaSeries operator-(const FormalLambdaSeries& a, const FormalLambdaSeries& b);
    friend bool operator==(const FormalLambdaSeries& a, const FormalLambdaSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    int order_;
    std::vector<TorusElement> coeffs_;  // index = lambda power
};

/// Sine bracket on torus monomials:
///   [z^m zeta^n, z^a zeta^b] = (1/lambda) Sin[lambda (n a - m b)] z^{m+a} zeta^{n+b},
/// expanded as a formal lambda-series to order 2S (even powers only).
FormalLambdaSeries sine_bracket(const TorusElement& a, const TorusElement& b, int S);

/// Sine bracket extended to lambda-series arguments (order-truncated);
/// needed to nest brackets for the Jacobi sum.
FormalLambdaSeries sine_bracket(const FormalLambdaSeries& a, const TorusElement& b, int S);

/// Jacobi sum {{f,g},h} + {{h,f},g} + {{g,h},f} vanishes through the stored
/// lambda order.
bool sine_jacobi_check(const TorusElement& f, const TorusElement& g, const TorusElement& h, int S);

enum class StarProduct { moyal, qplane, qweyl, qstandard, qantistandard, circ };

/// (f*g)*h == f*(g*h) for the selected product, exactly.
bool associativity_check(StarProduct star, const PhaseSymbol& f, const PhaseSymbol& g,
                         const PhaseSymbol& h, const Rational& kappa, const QValue& q);

enum class BracketKind { moyal, poisson, circ_commutator };

/// Cyclic Jacobi sum for the selected bracket; zero exactly.
bool jacobi_check(BracketKind bracket, const PhaseSymbol& f, const PhaseSymbol& g,
                  const PhaseSymbol& h, const Rational& kappa);

/// True iff the kappa^0 part of the Moyal bracket equals the Poisson bracket,
/// extracted by evaluating the odd-order sum at kappa = 0.
bool classical_limit_check(const PhaseSymbol& f, const PhaseSymbol& g);

PhaseSymbol apply_star(StarProduct star, const PhaseSymbol& f, const PhaseSymbol& g,
                       const Rational& kappa, const QValue& q);

}  // namespace qkp
