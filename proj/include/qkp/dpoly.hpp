#pragma once

#include "qkp/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace qkp {

/// Differential polynomial in abstract generators u_i and their x-derivatives.
/// A generator (i, k) stands for the k-th x-derivative of the unknown u_i;
/// indices follow the KP convention i >= 2 (u_2 = u). Rendered as
/// u2, u2', u2'', u2''', u2^(4), ...
class DPoly {
public:
    using Gen = std::pair<int, int>;        // (function index, derivative order)
    using Monomial = std::map<Gen, int>;    // generator -> positive exponent

    DPoly() = default;
    explicit DPoly(Rational constant) {
        if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
    }
    explicit DPoly(long constant) : DPoly(Rational(constant)) {}

    static DPoly generator(int fn, int der, Rational coeff = Rational(1)) {
        if (fn < 2) throw std::invalid_argument("DPoly: generator index must be >= 2");
        if (der < 0) throw std::invalid_argument("DPoly: negative derivative order");
        DPoly p;
        if (!coeff.is_zero()) p.terms_.emplace(Monomial{{Gen{fn, der}, 1}}, std::move(coeff));
        return p;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend DPoly operator+(const DPoly& a, const DPoly& b);
    friend DPoly operator-(const DPoly& a, const DPoly& b);
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    DPoly operator-() const;
    friend DPoly operator*(const Rational& c, const DPoly& f);
    friend bool operator==(const DPoly& a, const DPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);

    /// Highest function index appearing, or 0 if constant.
    [[nodiscard]] int max_fn_index() const;

    [[nodiscard]] std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

/// x-derivative, extended as a derivation: (i,k) -> (i,k+1).
DPoly ddx(const DPoly& f);

DPoly ddx_iter(const DPoly& f, int k);

}  // namespace qkp
