#pragma once

#include "qkp/qcalc.hpp"
#include "qkp/window_series.hpp"
#include "qkp/xlaurent.hpp"

#include <map>
#include <vector>

namespace qkp {

/// Truncated series sum a_i(x) Dq^i in the Jackson-derivative symbol, with
/// the deformation parameter carried on the series. Adjoints live in the
/// mirrored algebra with parameter 1/q (same type, reciprocal q).
struct QOperatorSeries {
    WindowSeries<XLaurent> s;
    QValue q;

    QOperatorSeries(int top, int depth, QValue qv) : s(top, depth), q(std::move(qv)) {}
    QOperatorSeries(WindowSeries<XLaurent> ws, QValue qv) : s(std::move(ws)), q(std::move(qv)) {}

    static QOperatorSeries identity(int depth, const QValue& q) {
        QOperatorSeries out(0, depth, q);
        out.s.set(0, XLaurent(1));
        return out;
    }
    static QOperatorSeries symbol_power(int n, int depth, const QValue& q) {
        QOperatorSeries out(n, depth, q);
        out.s.set(n, XLaurent(1));
        return out;
    }
};

/// Monic dressing series S = 1 + w_1 Dq^-1 + ... conjugating Dq to a Lax
/// operator.
struct QDressing {
    QOperatorSeries S;
};

/// Normal-ordered form of Dq^n o b:
///   sum_k [n k]_q tau^{n-k}(Dq^k b) Dq^{n-k},
/// truncated to `depth` slots. Negative n yields the infinite tail form.
QOperatorSeries q_leibniz_expand(int n, const XLaurent& b, const QValue& q, int depth);

/// Bilinear extension of the q-Leibniz rule; exact modulo tail.
QOperatorSeries compose_q(const QOperatorSeries& A, const QOperatorSeries& B);

QOperatorSeries commutator_q(const QOperatorSeries& A, const QOperatorSeries& B);

/// Formal adjoint P* = sum (Dq*)^i a_i with Dq* = -(1/q) D_{1/q}, normal
/// ordered with coefficients left in the reciprocal algebra. The result
/// carries parameter 1/q.
QOperatorSeries adjoint_q(const QOperatorSeries& A);

/// Coefficient substitution c_i(x) -> c_i(x/t) t^i for t = q_sub.
QOperatorSeries substitute_x_scale(const QOperatorSeries& A, const QValue& q_sub);

XLaurent res_dq(const QOperatorSeries& A);
QOperatorSeries plus_part_q(const QOperatorSeries& A);
QOperatorSeries minus_part_q(const QOperatorSeries& A);
QOperatorSeries power_q(const QOperatorSeries& A, int n);

/// Geometric inverse of a monic series 1 + N (N strictly negative order),
/// exact modulo tail.
QOperatorSeries invert_monic_q(const QOperatorSeries& S);

enum class FlowBracketOrder {
    plus_first,  // [L^j_+, L]
    lax_first,   // [L, L^j_+] (the opposite convention, exposed as a flag)
};

/// q-KP flow right-hand side [ (L^j)_+, L ] for a Lax shape
/// L = Dq + a_0 + sum a_i Dq^-i with explicit Laurent coefficients.
QOperatorSeries qkp_flow_rhs(const QOperatorSeries& L, int j,
                             FlowBracketOrder order = FlowBracketOrder::plus_first);

/// Solves L o S = S o Dq recursively for w_1 .. w_depth. The constant
/// component of each w_k is gauged to zero; a constant obstruction in any
/// linear step is reported as a malformed window.
QDressing dressing_solve(const QOperatorSeries& L, int depth);

/// Dual-route check of the q-deformed residue lemma
///   res_z(P e_q(xz) . Q*|_{x/q} e_{1/q}(-xz)) = res_Dq(P o Q):
/// (a) eigen-symbol route collapsing e_q . e_{1/q}(-.) = 1, and
/// (b) expanded-series route keeping both exponential factors as explicit
///     truncated series built from qexp_coeffs.
/// True iff both routes agree with the operator residue exactly.
bool q_dickey_check(const QOperatorSeries& P, const QOperatorSeries& Q);

/// res_z( Dq^n d^alpha w . w* ) for wave functions built from a dressing S;
/// alpha indexes the time variables t_1..t_3 and each d_k contributes z^k.
/// Exact on the finitely many z-slots that can reach the residue.
XLaurent q_bilinear_residual(const QDressing& S, int n, const std::vector<int>& alpha);

/// Pointwise action of a truncated series on a Laurent polynomial, with
/// Dq^-1 realized by the monomial antiderivative. Used by oracles; the
/// operand must avoid the x^-1 obstruction on negative powers.
XLaurent apply_series_pointwise(const QOperatorSeries& A, const XLaurent& f);

}  // namespace qkp
