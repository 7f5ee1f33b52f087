#pragma once

#include "qkp/dpoly.hpp"
#include "qkp/moyal_series.hpp"
#include "qkp/psdo.hpp"
#include "qkp/qpsdo.hpp"
#include "qkp/starcalc.hpp"

#include <string>
#include <vector>

namespace qkp {

/// Coefficients v_0, v_1, ... of the Lax symbol xi + v_0 xi^-1 + v_1 xi^-2 + ...
/// (leading normalization fixed; the displaced index aligns v_n with the
/// generator u_{n+2}).
struct SatoCoeffs {
    std::vector<DPoly> v;
    static SatoCoeffs generators(int count);
};

/// Coefficients u_0, u_1, ... of the momentum symbol lambda + u_0 lambda^-1 + ...
struct MoyalCoeffs {
    std::vector<DPoly> u;
};

/// u_n = sum_{j<=n} 2^-j C(n,j) d_x^j v_{n-j}; linear, lower triangular with
/// unit diagonal.
MoyalCoeffs sato_to_moyal(const SatoCoeffs& v);

/// Inverse of sato_to_moyal by forward substitution; exact round trip.
SatoCoeffs moyal_to_sato(const MoyalCoeffs& u);

/// Lax symbol series built from Sato coefficients (kappa = 1).
DSeries sato_lax(const SatoCoeffs& v);

/// Momentum symbol series built from Moyal coefficients.
MomentumSeries<DPoly> moyal_lambda(const MoyalCoeffs& u);

/// Flow right-hand side { (Lambda^{*m})_+, Lambda }_kappa as a momentum
/// series; the coefficient of lambda^{-n-1} is d_m u_n.
MomentumSeries<DPoly> moyal_kp_flow_rhs(const MoyalCoeffs& u, int m, const Rational& kappa);

/// Derivation u_{n} -> coefficient of lambda^{-n-1}, as generator table.
FlowDerivation moyal_flow_derivation(const MoyalCoeffs& u, int m, const Rational& kappa);

struct ReportEntry {
    int index;
    std::string lhs;
    std::string rhs;
    bool equal;
};

struct Report {
    std::vector<ReportEntry> entries;
    [[nodiscard]] bool all_equal() const {
        for (const auto& e : entries)
            if (!e.equal) return false;
        return true;
    }
    [[nodiscard]] std::string table(const std::string& lhs_label, const std::string& rhs_label) const;
};

/// Pushes the Sato flows through the coefficient map and compares them with
/// the Moyal flows of the mapped coefficients, per index n = 0..depth-1,
/// at kappa = 1/2. Any mismatch is reported with both expressions.
Report flow_correspondence_check(int m, int depth);

/// Classical phase-space flow { (lambda^n)_+, lambda } on a concrete symbol.
PhaseSymbol dkp_flow_rhs(const PhaseSymbol& lambda_sym, int n);

/// Zero-curvature residual d_m B_n - d_n B_m + {B_n, B_m}_kappa with time
/// derivatives induced from the flows; true iff zero on every derivable slot.
/// kappa = 0 gives the dispersionless case.
bool zero_curvature_check(int m, int n, const Rational& kappa, int count);

/// Commutativity of the momentum-side flows [d_m, d_n] Lambda = 0 mod tail.
bool moyal_flow_commutativity_check(int m, int n, const Rational& kappa, int count);

/// Side-by-side rendering of the q-deformed Lax flow [L^2_+, L] against the
/// q-plane star flow lambda^2_+ * lambda - lambda * lambda^2_+ for shared
/// coefficient profiles a_0, a_1, ... — a diagnostic, not an equality check.
Report qlax_compare(const QValue& q, const std::vector<XLaurent>& profile, int depth);

}  // namespace qkp
