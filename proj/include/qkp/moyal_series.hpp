#pragma once

#include "qkp/dpoly.hpp"
#include "qkp/rational.hpp"
#include "qkp/window_series.hpp"
#include "qkp/xlaurent.hpp"

#include <vector>

namespace qkp {

/// Momentum-symbol series sum c_i(x) lambda^i under the window contract;
/// star products and brackets truncate to the guaranteed window, which is
/// what makes Laurent tails in lambda workable even though the coefficient
/// x-derivatives never terminate.
template <typename C>
using MomentumSeries = WindowSeries<C>;

namespace detail {

template <typename C>
std::vector<C> ddx_grid_of(const C& c, int upto) {
    std::vector<C> g;
    g.reserve(static_cast<std::size_t>(upto) + 1);
    g.push_back(c);
    for (int k = 1; k <= upto; ++k) g.push_back(ddx(g.back()));
    return g;
}

inline Rational falling(int i, int k) {
    Rational out(1);
    for (int t = 0; t < k; ++t) out *= Rational(i - t);
    return out;
}

}  // namespace detail

/// Windowed Moyal star product of momentum symbols.
template <typename C>
MomentumSeries<C> moyal_star_w(const MomentumSeries<C>& A, const MomentumSeries<C>& B,
                               const Rational& kappa) {
    const int ta = A.effective_top(), tb = B.effective_top();
    const int low = std::max(A.low() + tb, B.low() + ta);
    const int top = ta + tb;
    auto out = MomentumSeries<C>::with_window(std::max(top, low), low);
    const int smax_global = top - low;
    std::vector<std::vector<C>> agrid, bgrid;
    std::vector<int> apow, bpow;
    for (const auto& [i, ai] : A.coeffs()) {
        apow.push_back(i);
        agrid.push_back(detail::ddx_grid_of(ai, smax_global));
    }
    for (const auto& [j, bj] : B.coeffs()) {
        bpow.push_back(j);
        bgrid.push_back(detail::ddx_grid_of(bj, smax_global));
    }
    for (std::size_t ia = 0; ia < apow.size(); ++ia)
        for (std::size_t ib = 0; ib < bpow.size(); ++ib) {
            const int i = apow[ia], jp = bpow[ib];
            const int smax = i + jp - low;
            Rational ks(1);  // kappa^s / s!
            for (int s = 0; s <= smax; ++s) {
                if (s > 0) ks *= kappa / Rational(s);
                if (ks.is_zero()) break;
                const int slot = i + jp - s;
                if (slot > top) continue;
                for (int j = 0; j <= s; ++j) {
                    Rational ff = detail::falling(i, s - j) * detail::falling(jp, j);
                    if (ff.is_zero()) continue;
                    Rational w = ks * binom_generalized(s, j) * ff;
                    if (j % 2 != 0) w = -w;
                    out.add(slot, w * (agrid[ia][static_cast<std::size_t>(j)] *
                                       bgrid[ib][static_cast<std::size_t>(s - j)]));
                }
            }
        }
    out.tighten();
    return out;
}

/// Windowed Moyal bracket (f*g - g*f)/(2 kappa), i.e. the odd-order half of
/// the star sum. kappa = 0 degenerates to the Poisson bracket.
template <typename C>
MomentumSeries<C> moyal_bracket_w(const MomentumSeries<C>& A, const MomentumSeries<C>& B,
                                  const Rational& kappa) {
    const int ta = A.effective_top(), tb = B.effective_top();
    const int low = std::max(A.low() + tb, B.low() + ta);
    const int top = ta + tb;
    auto out = MomentumSeries<C>::with_window(std::max(top, low), low);
    const int smax_global = top - low;
    std::vector<std::vector<C>> agrid, bgrid;
    std::vector<int> apow, bpow;
    for (const auto& [i, ai] : A.coeffs()) {
        apow.push_back(i);
        agrid.push_back(detail::ddx_grid_of(ai, smax_global));
    }
    for (const auto& [j, bj] : B.coeffs()) {
        bpow.push_back(j);
        bgrid.push_back(detail::ddx_grid_of(bj, smax_global));
    }
    for (std::size_t ia = 0; ia < apow.size(); ++ia)
        for (std::size_t ib = 0; ib < bpow.size(); ++ib) {
            const int i = apow[ia], jp = bpow[ib];
            const int smax = i + jp - low;
            for (int s = 1; s <= smax; s += 2) {
                Rational ks = kappa.pow(s - 1) / factorial(s);
                if (ks.is_zero()) break;
                const int slot = i + jp - s;
                if (slot > top) continue;
                for (int j = 0; j <= s; ++j) {
                    Rational ff = detail::falling(i, s - j) * detail::falling(jp, j);
                    if (ff.is_zero()) continue;
                    Rational w = ks * binom_generalized(s, j) * ff;
                    if (j % 2 != 0) w = -w;
                    out.add(slot, w * (agrid[ia][static_cast<std::size_t>(j)] *
                                       bgrid[ib][static_cast<std::size_t>(s - j)]));
                }
            }
        }
    out.tighten();
    return out;
}

template <typename C>
MomentumSeries<C> star_power_w(const MomentumSeries<C>& A, int m, const Rational& kappa) {
    if (m < 1) throw std::invalid_argument("star_power_w: exponent must be positive");
    MomentumSeries<C> out = A;
    for (int i = 1; i < m; ++i) out = moyal_star_w(out, A, kappa);
    return out;
}

}  // namespace qkp
