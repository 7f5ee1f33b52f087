#pragma once

#include "qkp/dpoly.hpp"
#include "qkp/rational.hpp"
#include "qkp/window_series.hpp"
#include "qkp/xlaurent.hpp"

#include <map>
#include <vector>

namespace qkp {

/// Truncated pseudodifferential symbol series sum a_i(x) xi^i with the
/// Leibniz composition weight kappa carried on the series; composing series
/// with different kappa is an error rather than a silent reinterpretation.
template <typename C>
struct OperatorSeries {
    WindowSeries<C> s;
    Rational kappa;

    OperatorSeries(int top, int depth, Rational k = Rational(1))
        : s(top, depth), kappa(std::move(k)) {}
    OperatorSeries(WindowSeries<C> ws, Rational k) : s(std::move(ws)), kappa(std::move(k)) {}

    static OperatorSeries identity(int depth, Rational k = Rational(1)) {
        OperatorSeries out(0, depth, std::move(k));
        out.s.set(0, C(Rational(1)));
        return out;
    }
    static OperatorSeries symbol_power(int n, int depth, Rational k = Rational(1)) {
        OperatorSeries out(n, depth, std::move(k));
        out.s.set(n, C(Rational(1)));
        return out;
    }
};

using XSeries = OperatorSeries<XLaurent>;
using DSeries = OperatorSeries<DPoly>;

namespace detail {
inline void check_kappa(const Rational& a, const Rational& b) {
    if (a != b) throw std::invalid_argument("OperatorSeries: kappa mismatch");
}
}  // namespace detail

/// Symbol composition A o B = sum_k (kappa^k / k!) (d/dxi)^k A . (d/dx)^k B,
/// truncated to the window both operands can guarantee. The k-sum terminates
/// because each k lowers the symbol power kept in the window.
template <typename C>
OperatorSeries<C> compose(const OperatorSeries<C>& A, const OperatorSeries<C>& B) {
    detail::check_kappa(A.kappa, B.kappa);
    const int ta = A.s.effective_top(), tb = B.s.effective_top();
    const int low = std::max(A.s.low() + tb, B.s.low() + ta);
    const int top = ta + tb;
    OperatorSeries<C> out(WindowSeries<C>::with_window(std::max(top, low), low), A.kappa);
    for (const auto& [j, bj] : B.s.coeffs()) {
        C dxb = bj;                    // (d/dx)^k b_j, built incrementally
        Rational wk(1);                // kappa^k / k!
        const int kmax = ta + j - low; // deepest k that can still land in window
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                dxb = ddx(dxb);
                wk *= A.kappa / Rational(k);
                if (dxb == C{}) break;
            }
            for (const auto& [i, ai] : A.s.coeffs()) {
                const int p = i - k + j;
                if (p < low || p > top) continue;
                // falling factorial i(i-1)...(i-k+1)
                Rational ff(1);
                for (int t = 0; t < k; ++t) ff *= Rational(i - t);
                if (ff.is_zero()) continue;
                out.s.add(p, (wk * ff) * (ai * dxb));
            }
        }
    }
    out.s.tighten();
    return out;
}

template <typename C>
OperatorSeries<C> commutator(const OperatorSeries<C>& A, const OperatorSeries<C>& B) {
    OperatorSeries<C> ab = compose(A, B), ba = compose(B, A);
    return OperatorSeries<C>(ab.s - ba.s, ab.kappa);
}

/// Formal adjoint with x* = x, xi* = -xi and (AB)* = B*A*, normal ordered
/// back to coefficient-left form. The window is preserved exactly.
template <typename C>
OperatorSeries<C> adjoint(const OperatorSeries<C>& A) {
    OperatorSeries<C> out(WindowSeries<C>::with_window(A.s.top(), A.s.low()), A.kappa);
    for (const auto& [i, ai] : A.s.coeffs()) {
        // (-xi)^i o a_i = (-1)^i sum_k C(i,k) kappa^k a_i^{(k)} xi^{i-k}
        C d = ai;
        Rational wk(1);
        for (int k = 0; i - k >= A.s.low(); ++k) {
            if (k > 0) {
                d = ddx(d);
                wk *= A.kappa / Rational(k);
                if (d == C{}) break;
            }
            Rational ff(1);
            for (int t = 0; t < k; ++t) ff *= Rational(i - t);
            if (ff.is_zero()) continue;
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            out.s.add(i - k, (sign * wk * ff) * d);
        }
    }
    out.s.tighten();
    return out;
}

template <typename C>
C res_partial(const OperatorSeries<C>& A) { return A.s.residue(); }

template <typename C>
OperatorSeries<C> plus_part(const OperatorSeries<C>& A) { return OperatorSeries<C>(A.s.plus_part(), A.kappa); }

template <typename C>
OperatorSeries<C> minus_part(const OperatorSeries<C>& A) { return OperatorSeries<C>(A.s.minus_part(), A.kappa); }

template <typename C>
OperatorSeries<C> power(const OperatorSeries<C>& A, int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    if (n == 0) return OperatorSeries<C>::identity(A.s.depth(), A.kappa);
    OperatorSeries<C> out = A;
    for (int i = 1; i < n; ++i) out = compose(out, A);
    return out;
}

/// Lax operator L = xi + u_2 xi^-1 + u_3 xi^-2 + ... with u_i = generator
/// (i,0); carries `count` unknown functions u_2 .. u_{count+1}.
DSeries make_lax_kp(int count);

/// [B_n, L] with B_n = (L^n)_+. Differential-polynomial domain with kappa=1.
DSeries kp_flow_rhs(const DSeries& L, int n);

/// Derivation table mapping each unknown u_i to its flow right-hand side;
/// extends to derivatives and products. Generators without a table entry are
/// rejected rather than silently zeroed.
class FlowDerivation {
public:
    void set(int fn_index, DPoly rhs) { base_[fn_index] = std::move(rhs); }
    [[nodiscard]] bool has(int fn_index) const { return base_.count(fn_index) > 0; }
    [[nodiscard]] DPoly apply(const DPoly& f) const;

private:
    std::map<int, DPoly> base_;
};

/// Builds the derivation u_i -> coefficient of xi^{-(i-1)} in kp_flow_rhs.
FlowDerivation kp_flow_derivation(const DSeries& L, int n);

/// Checks d_m(flow_n(L)) - d_n(flow_m(L)) = 0 on every slot where both
/// derivations are known. `count` is the number of unknown functions tracked
/// in L; the comparable slots are xi^-1 .. xi^-(count-m-n).
bool flow_commutativity_check(int m, int n, int count);

/// Dickey residue lemma: res_z of the symbol pairing P(x,z) Q(x,-z) equals
/// res of P o Q*. Inputs are treated as exact finite symbols.
bool dickey_lemma_check(const XSeries& P, const XSeries& Q);

}  // namespace qkp
