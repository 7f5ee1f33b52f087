#include "qkp/correspond.hpp"

#include <sstream>

namespace qkp {

SatoCoeffs SatoCoeffs::generators(int count) {
    SatoCoeffs out;
    out.v.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) out.v.push_back(DPoly::generator(n + 2, 0));
    return out;
}

MoyalCoeffs sato_to_moyal(const SatoCoeffs& v) {
    MoyalCoeffs out;
    out.u.resize(v.v.size());
    for (std::size_t n = 0; n < v.v.size(); ++n) {
        DPoly acc;
        for (std::size_t j = 0; j <= n; ++j)
            acc += (Rational(1, 2).pow(static_cast<long>(j)) *
                    binom_generalized(static_cast<long>(n), static_cast<long>(j))) *
                   ddx_iter(v.v[n - j], static_cast<int>(j));
        out.u[n] = acc;
    }
    return out;
}

SatoCoeffs moyal_to_sato(const MoyalCoeffs& u) {
    SatoCoeffs out;
    out.v.resize(u.u.size());
    for (std::size_t n = 0; n < u.u.size(); ++n) {
        DPoly acc = u.u[n];
        for (std::size_t j = 1; j <= n; ++j)
            acc -= (Rational(1, 2).pow(static_cast<long>(j)) *
                    binom_generalized(static_cast<long>(n), static_cast<long>(j))) *
                   ddx_iter(out.v[n - j], static_cast<int>(j));
        out.v[n] = acc;
    }
    return out;
}

DSeries sato_lax(const SatoCoeffs& v) {
    const int count = static_cast<int>(v.v.size());
    DSeries L(1, count + 2, Rational(1));
    L.s.set(1, DPoly(1));
    for (int n = 0; n < count; ++n) L.s.set(-(n + 1), v.v[static_cast<std::size_t>(n)]);
    return L;
}

MomentumSeries<DPoly> moyal_lambda(const MoyalCoeffs& u) {
    const int count = static_cast<int>(u.u.size());
    auto out = MomentumSeries<DPoly>::with_window(1, -count - 1);
    out.set(1, DPoly(1));
    for (int n = 0; n < count; ++n) out.set(-(n + 1), u.u[static_cast<std::size_t>(n)]);
    return out;
}

MomentumSeries<DPoly> moyal_kp_flow_rhs(const MoyalCoeffs& u, int m, const Rational& kappa) {
    if (m < 1) throw std::invalid_argument("moyal_kp_flow_rhs: flow index must be positive");
    auto Lam = moyal_lambda(u);
    auto B = star_power_w(Lam, m, kappa).plus_part();
    return moyal_bracket_w(B, Lam, kappa);
}

FlowDerivation moyal_flow_derivation(const MoyalCoeffs& u, int m, const Rational& kappa) {
    auto F = moyal_kp_flow_rhs(u, m, kappa);
    FlowDerivation d;
    for (int n = 0; -(n + 1) >= F.low(); ++n) d.set(n + 2, F.coeff(-(n + 1)));
    return d;
}

std::string Report::table(const std::string& lhs_label, const std::string& rhs_label) const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "[" << (e.equal ? "ok" : "NE") << "] n=" << e.index << "\n";
        os << "    " << lhs_label << ": " << e.lhs << "\n";
        os << "    " << rhs_label << ": " << e.rhs << "\n";
    }
    return os.str();
}

Report flow_correspondence_check(int m, int depth) {
    if (m < 1 || depth < 1) throw std::invalid_argument("flow_correspondence_check: bad arguments");
    const Rational kappa(1, 2);
    const int count = depth + m + 1;
    SatoCoeffs v = SatoCoeffs::generators(count);

    // Lax-side flows d_m v_n.
    DSeries F = kp_flow_rhs(sato_lax(v), m);
    std::vector<DPoly> dv(static_cast<std::size_t>(count));
    for (int n = 0; n < count && -(n + 1) >= F.s.low(); ++n)
        dv[static_cast<std::size_t>(n)] = F.s.coeff(-(n + 1));

    // Momentum-side flows of the mapped coefficients.
    MoyalCoeffs u = sato_to_moyal(v);
    auto G = moyal_kp_flow_rhs(u, m, kappa);

    Report report;
    for (int n = 0; n < depth; ++n) {
        // The map is linear with constant coefficients, so time derivatives
        // push through term by term.
        DPoly lhs;
        for (int j = 0; j <= n; ++j)
            lhs += (Rational(1, 2).pow(j) * binom_generalized(n, j)) *
                   ddx_iter(dv[static_cast<std::size_t>(n - j)], j);
        DPoly rhs = G.coeff(-(n + 1));
        report.entries.push_back(ReportEntry{n, lhs.str(), rhs.str(), lhs == rhs});
    }
    return report;
}

PhaseSymbol dkp_flow_rhs(const PhaseSymbol& lambda_sym, int n) {
    if (n < 1) throw std::invalid_argument("dkp_flow_rhs: flow index must be positive");
    PhaseSymbol pw(Rational(1));
    for (int i = 0; i < n; ++i) pw = pw * lambda_sym;
    PhaseSymbol B;
    for (const auto& [k, c] : pw.terms())
        if (k.second >= 0) B.add(k.first, k.second, c);
    return poisson_dkp(B, lambda_sym);
}

namespace {

/// Applies a flow derivation to every stored slot; slots whose generators
/// fall outside the table are dropped (they are below the derivable window).
MomentumSeries<DPoly> apply_derivation(const FlowDerivation& d, const MomentumSeries<DPoly>& A) {
    auto out = MomentumSeries<DPoly>::with_window(A.top(), A.low());
    int floor = A.low();
    for (int p = A.effective_top(); p >= A.low(); --p) {
        DPoly value;
        try {
            value = d.apply(A.coeff(p));
        } catch (const std::out_of_range&) {
            floor = p + 1;
            break;
        }
        if (!(value == DPoly{})) out.set(p, std::move(value));
    }
    auto r = out.restricted(floor);
    return r;
}

}  // namespace

bool zero_curvature_check(int m, int n, const Rational& kappa, int count) {
    if (m == n) return true;
    MoyalCoeffs u{SatoCoeffs::generators(count).v};
    auto Lam = moyal_lambda(u);
    auto Bm = star_power_w(Lam, m, kappa).plus_part();
    auto Bn = star_power_w(Lam, n, kappa).plus_part();
    FlowDerivation dm = moyal_flow_derivation(u, m, kappa);
    FlowDerivation dn = moyal_flow_derivation(u, n, kappa);

    auto dBn = apply_derivation(dm, Bn);
    auto dBm = apply_derivation(dn, Bm);
    auto resid = dBn - dBm + moyal_bracket_w(Bn, Bm, kappa);
    if (resid.low() > 0)
        throw std::invalid_argument("zero_curvature_check: no comparable slot; increase count");
    return resid.is_zero_mod_tail();
}

bool moyal_flow_commutativity_check(int m, int n, const Rational& kappa, int count) {
    if (m == n) return true;
    MoyalCoeffs u{SatoCoeffs::generators(count).v};
    auto Fm = moyal_kp_flow_rhs(u, m, kappa);
    auto Fn = moyal_kp_flow_rhs(u, n, kappa);
    FlowDerivation dm = moyal_flow_derivation(u, m, kappa);
    FlowDerivation dn = moyal_flow_derivation(u, n, kappa);
    bool any = false;
    const int floor = std::max(Fm.low(), Fn.low());
    for (int p = -1; p >= floor; --p) {
        DPoly lhs, rhs;
        try {
            lhs = dm.apply(Fn.coeff(p));
            rhs = dn.apply(Fm.coeff(p));
        } catch (const std::out_of_range&) {
            break;
        }
        any = true;
        if (lhs != rhs) return false;
    }
    if (!any)
        throw std::invalid_argument("moyal_flow_commutativity_check: count too small");
    return true;
}

Report qlax_compare(const QValue& q, const std::vector<XLaurent>& profile, int depth) {
    if (profile.empty()) throw std::invalid_argument("qlax_compare: empty coefficient profile");

    // q-side Lax flow [L^2_+, L].
    const int amax = static_cast<int>(profile.size()) - 1;
    QOperatorSeries L(1, std::max(depth + 2, amax + 2), q);
    L.s.set(1, XLaurent(1));
    for (int i = 0; i <= amax; ++i)
        if (!profile[static_cast<std::size_t>(i)].is_zero())
            L.s.set(-i, profile[static_cast<std::size_t>(i)]);
    QOperatorSeries F = qkp_flow_rhs(L, 2);

    // Star-side flow lambda^2_+ * lambda - lambda * lambda^2_+ on the q-plane.
    PhaseSymbol lam = PhaseSymbol::monomial(0, 1);
    for (int i = 0; i <= amax; ++i)
        for (const auto& [e, c] : profile[static_cast<std::size_t>(i)].terms())
            lam.add(e, -i, c);
    PhaseSymbol lam2 = qplane_star(lam, lam, q);
    PhaseSymbol B;
    for (const auto& [k, c] : lam2.terms())
        if (k.second >= 0) B.add(k.first, k.second, c);
    PhaseSymbol G = qplane_star(B, lam, q) - qplane_star(lam, B, q);

    // Collect the star side by momentum power.
    std::map<int, XLaurent> star_side;
    for (const auto& [k, c] : G.terms()) star_side[static_cast<int>(k.second)].add_term(k.first, c);

    Report report;
    int lo = F.s.low();
    for (const auto& [pw, co] : star_side) lo = std::min(lo, pw);
    int hi = std::max(F.s.effective_top(), 0);
    for (int j = hi; j >= lo; --j) {
        XLaurent lhs = j >= F.s.low() ? F.s.coeff(j) : XLaurent();
        auto it = star_side.find(j);
        XLaurent rhs = it == star_side.end() ? XLaurent() : it->second;
        if (lhs.is_zero() && rhs.is_zero()) continue;
        report.entries.push_back(ReportEntry{j, lhs.str(), rhs.str(), lhs == rhs});
    }
    return report;
}

}  // namespace qkp
