#include "qkp/qpsdo.hpp"

namespace qkp {

namespace {
void check_q(const QOperatorSeries& A, const QOperatorSeries& B) {
    if (A.q != B.q) throw std::invalid_argument("QOperatorSeries: q mismatch");
}
}  // namespace

QOperatorSeries q_leibniz_expand(int n, const XLaurent& b, const QValue& q, int depth) {
    QOperatorSeries out(n, depth, q);
    XLaurent dqb = b;  // Dq^k b
    for (int k = 0; k < depth; ++k) {
        if (k > 0) dqb = dq(dqb, q);
        Rational w = qbinom_bracket(n, k, q);
        if (w.is_zero()) continue;
        XLaurent c = w * tau_scale(dqb, q, n - k);
        if (!c.is_zero()) out.s.add(n - k, c);
    }
    out.s.tighten();
    return out;
}

QOperatorSeries compose_q(const QOperatorSeries& A, const QOperatorSeries& B) {
    check_q(A, B);
    const int ta = A.s.effective_top(), tb = B.s.effective_top();
    const int low = std::max(A.s.low() + tb, B.s.low() + ta);
    const int top = ta + tb;
    QOperatorSeries out(WindowSeries<XLaurent>::with_window(std::max(top, low), low), A.q);
    for (const auto& [j, bj] : B.s.coeffs()) {
        XLaurent dqb = bj;
        const int kmax = ta + j - low;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                dqb = dq(dqb, A.q);
                if (dqb.is_zero()) break;
            }
            for (const auto& [i, ai] : A.s.coeffs()) {
                const int p = i - k + j;
                if (p < low || p > top) continue;
                Rational w = qbinom_bracket(i, k, A.q);
                if (w.is_zero()) continue;
                out.s.add(p, w * (ai * tau_scale(dqb, A.q, i - k)));
            }
        }
    }
    out.s.tighten();
    return out;
}

QOperatorSeries commutator_q(const QOperatorSeries& A, const QOperatorSeries& B) {
    QOperatorSeries ab = compose_q(A, B), ba = compose_q(B, A);
    return QOperatorSeries(ab.s - ba.s, ab.q);
}

QOperatorSeries adjoint_q(const QOperatorSeries& A) {
    QValue qr = A.q.reciprocal();
    QOperatorSeries out(WindowSeries<XLaurent>::with_window(A.s.top(), A.s.low()), qr);
    for (const auto& [i, ai] : A.s.coeffs()) {
        // (Dq*)^i o a_i = (-1)^i q^-i D_{1/q}^i o a_i, normal ordered with the
        // (1/q)-Leibniz rule.
        Rational scale = A.q.value().pow(-i);
        if (i % 2 != 0) scale = -scale;
        XLaurent d = ai;  // D_{1/q}^k a_i
        for (int k = 0; i - k >= A.s.low(); ++k) {
            if (k > 0) {
                d = dq(d, qr);
                if (d.is_zero()) break;
            }
            Rational w = qbinom_bracket(i, k, qr);
            if (w.is_zero()) continue;
            out.s.add(i - k, (scale * w) * tau_scale(d, qr, i - k));
        }
    }
    out.s.tighten();
    return out;
}

QOperatorSeries substitute_x_scale(const QOperatorSeries& A, const QValue& q_sub) {
    QOperatorSeries out(WindowSeries<XLaurent>::with_window(A.s.top(), A.s.low()), A.q);
    for (const auto& [i, ai] : A.s.coeffs()) {
        XLaurent c = q_sub.value().pow(i) * tau_scale(ai, q_sub, -1);
        if (!c.is_zero()) out.s.add(i, c);
    }
    out.s.tighten();
    return out;
}

XLaurent res_dq(const QOperatorSeries& A) { return A.s.residue(); }

QOperatorSeries plus_part_q(const QOperatorSeries& A) { return QOperatorSeries(A.s.plus_part(), A.q); }

QOperatorSeries minus_part_q(const QOperatorSeries& A) { return QOperatorSeries(A.s.minus_part(), A.q); }

QOperatorSeries power_q(const QOperatorSeries& A, int n) {
    if (n < 0) throw std::invalid_argument("power_q: negative exponent");
    if (n == 0) return QOperatorSeries::identity(A.s.depth(), A.q);
    QOperatorSeries out = A;
    for (int i = 1; i < n; ++i) out = compose_q(out, A);
    return out;
}

QOperatorSeries invert_monic_q(const QOperatorSeries& S) {
    if (!(S.s.coeff(0) == XLaurent(1)) || S.s.effective_top() != 0)
        throw std::invalid_argument("invert_monic_q: series must be 1 + (negative order)");
    QOperatorSeries neg_n = QOperatorSeries(S.s.minus_part(), S.q);
    neg_n = QOperatorSeries(neg_n.s.negated(), S.q);
    QOperatorSeries acc = QOperatorSeries::identity(S.s.depth(), S.q);
    QOperatorSeries term = acc;
    for (int r = 1; r < S.s.depth(); ++r) {
        term = compose_q(neg_n, term);
        if (term.s.is_zero()) break;
        acc = QOperatorSeries(acc.s + term.s, S.q);
    }
    return acc;
}

QOperatorSeries qkp_flow_rhs(const QOperatorSeries& L, int j, FlowBracketOrder order) {
    if (j < 1) throw std::invalid_argument("qkp_flow_rhs: flow index must be positive");
    QOperatorSeries Bj = plus_part_q(power_q(L, j));
    return order == FlowBracketOrder::plus_first ? commutator_q(Bj, L) : commutator_q(L, Bj);
}

QDressing dressing_solve(const QOperatorSeries& L, int depth) {
    if (depth < 1) throw std::invalid_argument("dressing_solve: depth must be positive");
    if (L.s.effective_top() != 1 || !(L.s.coeff(1) == XLaurent(1)))
        throw std::invalid_argument("dressing_solve: L must be monic of order one");
    if (L.s.low() > 1 - depth)
        throw std::invalid_argument("dressing_solve: L window too shallow for requested depth");
    const QValue& q = L.q;

    // a_i = coefficient of Dq^-i (i >= 0; a_0 must be free of constants).
    auto a = [&](int i) { return L.s.coeff(-i); };

    std::vector<XLaurent> w(static_cast<std::size_t>(depth) + 1);
    w[0] = XLaurent(1);
    for (int k = 1; k <= depth; ++k) {
        // Matching the Dq^{1-k} slot of L o S = S o Dq gives
        //   (tau - 1) w_k = -Dq w_{k-1}
        //                   - sum_{i+j+s=k-1} a_i [(-i) s]_q tau^{-i-s}(Dq^s w_j).
        XLaurent rhs = -dq(w[static_cast<std::size_t>(k - 1)], q);
        for (int i = 0; i <= k - 1; ++i) {
            if (a(i).is_zero()) continue;
            for (int j = 0; i + j <= k - 1; ++j) {
                int s = k - 1 - i - j;
                Rational bc = qbinom_bracket(-i, s, q);
                if (bc.is_zero()) continue;
                XLaurent dsw = w[static_cast<std::size_t>(j)];
                for (int t = 0; t < s; ++t) dsw = dq(dsw, q);
                rhs -= bc * (a(i) * tau_scale(dsw, q, -i - s));
            }
        }
        // Solve (tau - 1) w_k = rhs on the monomial basis: x^n picks up
        // (q^n - 1); a constant term on the right is an obstruction.
        XLaurent wk;
        for (const auto& [e, c] : rhs.terms()) {
            if (e == 0)
                throw std::domain_error(
                    "dressing_solve: non-solvable linear step (constant obstruction) at w_" +
                    std::to_string(k));
            wk.set(e, c / (q.value().pow(e) - Rational(1)));
        }
        w[static_cast<std::size_t>(k)] = wk;
    }

    QOperatorSeries S(0, depth + 1, q);
    S.s.set(0, XLaurent(1));
    for (int k = 1; k <= depth; ++k)
        if (!w[static_cast<std::size_t>(k)].is_zero()) S.s.set(-k, w[static_cast<std::size_t>(k)]);
    return QDressing{std::move(S)};
}

namespace {

/// z-slot map of U(x,z) * exp-series(xz): slot r = sum_i U_i(x) e_{r-i} x^{r-i}.
std::map<int, XLaurent> wave_slots(const QOperatorSeries& U, const std::vector<Rational>& exp_coeffs,
                                   int slot_min, int slot_max) {
    std::map<int, XLaurent> out;
    for (int r = slot_min; r <= slot_max; ++r) {
        XLaurent acc;
        for (const auto& [i, ci] : U.s.coeffs()) {
            int k = r - i;
            if (k < 0 || k >= static_cast<int>(exp_coeffs.size())) continue;
            acc += exp_coeffs[static_cast<std::size_t>(k)] * (ci * XLaurent::monomial(k));
        }
        if (!acc.is_zero()) out.emplace(r, std::move(acc));
    }
    return out;
}

/// Symbol evaluated at -z: coefficient j picks up (-1)^j.
QOperatorSeries at_minus_z(const QOperatorSeries& V) {
    QOperatorSeries out(WindowSeries<XLaurent>::with_window(V.s.top(), V.s.low()), V.q);
    for (const auto& [j, c] : V.s.coeffs()) out.s.add(j, j % 2 == 0 ? c : -c);
    out.s.tighten();
    return out;
}

/// Coefficient of z^slot in the product of two slot maps.
XLaurent product_slot(const std::map<int, XLaurent>& A, const std::map<int, XLaurent>& B, int slot) {
    XLaurent acc;
    for (const auto& [r, a] : A) {
        auto it = B.find(slot - r);
        if (it != B.end()) acc += a * it->second;
    }
    return acc;
}

}  // namespace

bool q_dickey_check(const QOperatorSeries& P, const QOperatorSeries& Q) {
    check_q(P, Q);
    const QValue& q = P.q;

    // Operator route. The exact finite inputs are deepened BEFORE any
    // adjoint/composition so every slot that can reach the residue is
    // computed rather than zero-padded.
    const int tP = P.s.effective_top(), tQ = Q.s.effective_top();
    QOperatorSeries Pd(P.s.deepened(std::min(P.s.low(), -1 - tQ)), q);
    QOperatorSeries Qdeep(Q.s.deepened(std::min(Q.s.low(), -1 - tP)), q);
    XLaurent rhs = res_dq(compose_q(Pd, Qdeep));
    QOperatorSeries Qadj = substitute_x_scale(adjoint_q(Qdeep), q);

    // Eigen-symbol route: P e_q(xz) = P(x,z) e_q(xz) and
    // Q*|_{x/q} e_{1/q}(-xz) = V(x,-z) e_{1/q}(-xz), with the exponential
    // factors cancelling exactly.
    QOperatorSeries Vm = at_minus_z(Qadj);
    XLaurent eigen;
    for (const auto& [i, pi] : P.s.coeffs()) {
        const int j = -1 - i;
        if (j < Vm.s.low() || j > Vm.s.top()) continue;
        eigen += pi * Vm.s.coeff(j);
    }

    // Expanded-series route: keep both exponential factors as explicit
    // truncated series and read off the z^-1 slot of the full product. Only
    // finitely many slots can reach it, so this is exact as well.
    const int lU = P.s.low(), lV = Vm.s.low();
    const int r_hi = -1 - lV, s_hi = -1 - lU;
    const int kmax = std::max(r_hi - lU, s_hi - lV) + 1;
    std::vector<Rational> eq = qexp_coeffs(std::max(kmax, 0), q);
    std::vector<Rational> eqr = qexp_recip_coeffs(std::max(kmax, 0), q);
    auto W1 = wave_slots(P, eq, lU, r_hi);
    auto W2 = wave_slots(Vm, eqr, lV, s_hi);
    XLaurent series = product_slot(W1, W2, -1);

    return rhs == eigen && eigen == series;
}

XLaurent q_bilinear_residual(const QDressing& S, int n, const std::vector<int>& alpha) {
    if (n < 0) throw std::invalid_argument("q_bilinear_residual: n must be nonnegative");
    const QValue& q = S.S.q;
    int m = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 0) throw std::invalid_argument("q_bilinear_residual: negative multi-index");
        m += static_cast<int>(k + 1) * alpha[k];
    }

    // Dq^n d^alpha w = z^m (Dq^n o S)(x,z) e_q(xz) . exp(sum t_i z^i); the
    // time exponentials cancel between w and w*.
    QOperatorSeries U = compose_q(QOperatorSeries::symbol_power(n, S.S.s.depth(), q), S.S);
    QOperatorSeries V = at_minus_z(substitute_x_scale(invert_monic_q(adjoint_q(S.S)), q));

    const int slot = -1 - m;
    const int lU = U.s.low(), lV = V.s.low();
    const int r_hi = slot - lV, s_hi = slot - lU;
    if (r_hi < lU) return XLaurent();  // no slot pair can reach the residue
    const int kmax = std::max({r_hi - lU, s_hi - lV, 0}) + 1;
    std::vector<Rational> eq = qexp_coeffs(kmax, q);
    std::vector<Rational> eqr = qexp_recip_coeffs(kmax, q);
    auto W1 = wave_slots(U, eq, lU, r_hi);
    auto W2 = wave_slots(V, eqr, lV, s_hi);
    return product_slot(W1, W2, slot);
}

XLaurent apply_series_pointwise(const QOperatorSeries& A, const XLaurent& f) {
    XLaurent out;
    for (const auto& [i, ci] : A.s.coeffs()) {
        XLaurent g = f;
        if (i >= 0)
            for (int k = 0; k < i; ++k) g = dq(g, A.q);
        else
            for (int k = 0; k < -i; ++k) g = dq_inverse_monomial(g, A.q);
        out += ci * g;
    }
    return out;
}

}  // namespace qkp
