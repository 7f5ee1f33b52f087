#include "qkp/psdo.hpp"

namespace qkp {

DSeries make_lax_kp(int count) {
    if (count < 1) throw std::invalid_argument("make_lax_kp: need at least one unknown");
    DSeries L(1, count + 2, Rational(1));
    L.s.set(1, DPoly(1));
    for (int i = 2; i <= count + 1; ++i) L.s.set(-(i - 1), DPoly::generator(i, 0));
    return L;
}

DSeries kp_flow_rhs(const DSeries& L, int n) {
    if (n < 1) throw std::invalid_argument("kp_flow_rhs: flow index must be positive");
    DSeries Bn = plus_part(power(L, n));
    return commutator(Bn, L);
}

DPoly FlowDerivation::apply(const DPoly& f) const {
    DPoly out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [g, e] : m) {
            auto it = base_.find(g.first);
            if (it == base_.end())
                throw std::out_of_range("FlowDerivation: generator u" + std::to_string(g.first) +
                                        " outside computed flow window");
            DPoly::Monomial rest = m;
            if (e == 1) rest.erase(g);
            else rest[g] = e - 1;
            DPoly factor = ddx_iter(it->second, g.second);
            DPoly rest_poly;
            rest_poly.add_term(rest, Rational(e) * c);
            out += rest_poly * factor;
        }
    }
    return out;
}

FlowDerivation kp_flow_derivation(const DSeries& L, int n) {
    DSeries F = kp_flow_rhs(L, n);
    FlowDerivation d;
    for (int i = 2; -(i - 1) >= F.s.low(); ++i) d.set(i, F.s.coeff(-(i - 1)));
    return d;
}

bool flow_commutativity_check(int m, int n, int count) {
    if (m == n) return true;
    DSeries L = make_lax_kp(count);
    DSeries Fm = kp_flow_rhs(L, m);
    DSeries Fn = kp_flow_rhs(L, n);
    FlowDerivation dm = kp_flow_derivation(L, m);
    FlowDerivation dn = kp_flow_derivation(L, n);

    // d_m applied to the u_i-flow under t_n, minus the mirror image, on every
    // slot whose generators all have known flows.
    bool any = false;
    const int floor = std::max(Fm.s.low(), Fn.s.low());
    for (int p = -1; p >= floor; --p) {
        DPoly lhs, rhs;
        try {
            lhs = dm.apply(Fn.s.coeff(p));
            rhs = dn.apply(Fm.s.coeff(p));
        } catch (const std::out_of_range&) {
            break;  // deeper slots need flows outside the computed window
        }
        any = true;
        if (lhs != rhs) return false;
    }
    if (!any)
        throw std::invalid_argument("flow_commutativity_check: count too small to compare any slot");
    return true;
}

bool dickey_lemma_check(const XSeries& P, const XSeries& Q) {
    detail::check_kappa(P.kappa, Q.kappa);

    // Spectral route: res_z of P(x,z) Q(x,-z), exact Laurent arithmetic.
    XLaurent lhs;
    for (const auto& [i, pi] : P.s.coeffs()) {
        int j = -1 - i;
        if (j < Q.s.low() || j > Q.s.top()) continue;
        XLaurent qj = Q.s.coeff(j);
        if (qj.is_zero()) continue;
        XLaurent prod = pi * qj;
        if (j % 2 != 0) prod = -prod;
        lhs += prod;
    }

    // Operator route: res of P o Q*. The windows of the exact finite inputs
    // are deepened BEFORE adjointing/composing, so every slot that can reach
    // the residue is actually computed rather than zero-padded.
    int tP = P.s.effective_top(), tQ = Q.s.effective_top();
    XSeries Pd(P.s.deepened(std::min(P.s.low(), -1 - tQ)), P.kappa);
    XSeries Qadj = adjoint(XSeries(Q.s.deepened(std::min(Q.s.low(), -1 - tP)), Q.kappa));
    XLaurent rhs = res_partial(compose(Pd, Qadj));

    return lhs == rhs;
}

}  // namespace qkp
