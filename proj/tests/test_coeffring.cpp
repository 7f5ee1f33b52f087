#include "qkp/dpoly.hpp"
#include "qkp/prng.hpp"
#include "qkp/times_poly.hpp"
#include "qkp/xlaurent.hpp"

#include <doctest.h>

using namespace qkp;

namespace {

// Brute-force Hirota oracle: expand a(t+s) b(t-s) in 2N variables, apply the
// s-derivatives, then set s = 0. Independent of the production formula.
TimesPoly hirota_shift_oracle(const TimesPoly& a, const TimesPoly& b, const std::vector<int>& multi) {
    const int N = a.arity();
    TimesPoly big(2 * N);
    auto embed = [&](const TimesPoly& f, int sign) {
        TimesPoly out = TimesPoly::constant(2 * N, Rational(0));
        for (const auto& [m, c] : f.terms()) {
            TimesPoly term = TimesPoly::constant(2 * N, c);
            for (int k = 0; k < N; ++k) {
                TimesPoly base = TimesPoly::variable(2 * N, k) +
                                 TimesPoly::variable(2 * N, N + k, Rational(sign));
                for (int e = 0; e < m[static_cast<std::size_t>(k)]; ++e) term = term * base;
            }
            out = out + term;
        }
        return out;
    };
    big = embed(a, 1) * embed(b, -1);
    for (int j = 0; j < N; ++j)
        for (int d = 0; d < multi[static_cast<std::size_t>(j)]; ++d) big = big.derivative(N + j);
    // set s = 0: keep terms with no s-exponents
    TimesPoly out(N);
    for (const auto& [m, c] : big.terms()) {
        bool pure = true;
        for (int k = N; k < 2 * N; ++k) pure = pure && m[static_cast<std::size_t>(k)] == 0;
        if (!pure) continue;
        TimesPoly::Monomial head(m.begin(), m.begin() + N);
        out.add_term(head, c);
    }
    return out;
}

TimesPoly random_times(Prng& rng, int arity, int max_deg) {
    TimesPoly f(arity);
    for (int i = 0; i < 5; ++i) {
        TimesPoly::Monomial m(static_cast<std::size_t>(arity), 0);
        for (int k = 0; k < arity; ++k) m[static_cast<std::size_t>(k)] = static_cast<int>(rng.range(0, max_deg));
        f.add_term(m, rng.rational());
    }
    if (f.is_zero()) f.add_term(TimesPoly::Monomial(static_cast<std::size_t>(arity), 0), Rational(1));
    return f;
}

}  // namespace

TEST_CASE("x-derivative") {
    CHECK(ddx(XLaurent::monomial(3)) == XLaurent::monomial(2, Rational(3)));
    CHECK(ddx(XLaurent::monomial(-1)) == XLaurent::monomial(-2, Rational(-1)));
    CHECK(ddx(XLaurent(7)).is_zero());

    // derivation rule on differential polynomials
    DPoly g20 = DPoly::generator(2, 0), g31 = DPoly::generator(3, 1);
    DPoly expect = DPoly::generator(2, 1) * g31 + g20 * DPoly::generator(3, 2);
    CHECK(ddx(g20 * g31) == expect);
}

TEST_CASE("jackson derivative and scaling") {
    QValue q2(Rational(2)), q32(Rational(3, 2));
    CHECK(dq(XLaurent::monomial(2), q2) == XLaurent::monomial(1, Rational(3)));
    CHECK(dq(XLaurent(5), q2).is_zero());
    CHECK(tau_scale(XLaurent::monomial(3), q32, -1) ==
          XLaurent::monomial(3, Rational(3, 2).pow(-3)));

    // product rule dq(fg) = dq(f) g + tau(f) dq(g)
    Prng rng(11);
    for (int i = 0; i < 30; ++i) {
        XLaurent f = rng.xlaurent(-3, 3), g = rng.xlaurent(-3, 3);
        CHECK(dq(f * g, q32) == dq(f, q32) * g + tau_scale(f, q32, 1) * dq(g, q32));
    }

    // tau = 1 + (q-1) x dq on the basis
    for (long e = -4; e <= 4; ++e) {
        XLaurent f = XLaurent::monomial(e);
        CHECK(tau_scale(f, q32, 1) ==
              f + (q32.value() - Rational(1)) * (XLaurent::monomial(1) * dq(f, q32)));
    }

    // commutator of d/dx and Dq on monomials, against termwise computation
    for (long n = -4; n <= 4; ++n) {
        XLaurent f = XLaurent::monomial(n);
        XLaurent lhs = ddx(dq(f, q32)) - dq(ddx(f), q32);
        XLaurent expect;
        if (n != 0)
            expect = XLaurent::monomial(n - 2, qint(n, q32) * Rational(n - 1) - Rational(n) * qint(n - 1, q32));
        CHECK(lhs == expect);
    }
}

TEST_CASE("monomial antiderivative of the jackson derivative") {
    QValue q32(Rational(3, 2));
    CHECK(dq_inverse_monomial(XLaurent::monomial(1), q32) ==
          XLaurent::monomial(2, qint(2, q32).inverse()));
    CHECK(dq_inverse_monomial(XLaurent(), q32).is_zero());
    CHECK_THROWS_AS(dq_inverse_monomial(XLaurent::monomial(-1), q32), std::domain_error);

    Prng rng(5);
    for (int i = 0; i < 25; ++i) {
        XLaurent f = rng.xlaurent(-4, 4);
        f.set(-1, Rational(0));
        if (f.is_zero()) continue;
        CHECK(dq(dq_inverse_monomial(f, q32), q32) == f);
    }
}

TEST_CASE("hirota bilinear derivative") {
    const int N = 3;
    Prng rng(17);
    TimesPoly a = random_times(rng, N, 2), b = random_times(rng, N, 2);

    SUBCASE("no derivatives gives the plain product") {
        CHECK(hirota_apply(a, b, {0, 0, 0}) == a * b);
    }
    SUBCASE("odd derivative on equal arguments vanishes") {
        CHECK(hirota_apply(a, a, {1, 0, 0}).is_zero());
        CHECK(hirota_apply(a, a, {0, 0, 3}).is_zero());
    }
    SUBCASE("matches the shift-expand-differentiate oracle") {
        TimesPoly t1 = TimesPoly::variable(N, 0);
        CHECK(hirota_apply(t1 * t1, t1 * t1, {2, 0, 0}) ==
              hirota_shift_oracle(t1 * t1, t1 * t1, {2, 0, 0}));
        for (const auto& multi : std::vector<std::vector<int>>{
                 {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 2, 1}, {3, 0, 0}, {1, 0, 2}})
            CHECK(hirota_apply(a, b, multi) == hirota_shift_oracle(a, b, multi));
    }
    SUBCASE("sign symmetry under argument swap") {
        for (const auto& multi : std::vector<std::vector<int>>{
                 {1, 0, 0}, {2, 0, 0}, {1, 1, 1}, {0, 3, 0}, {2, 1, 0}}) {
            int total = multi[0] + multi[1] + multi[2];
            TimesPoly swapped = hirota_apply(b, a, multi);
            if (total % 2 == 1) swapped = -swapped;
            CHECK(hirota_apply(a, b, multi) == swapped);
        }
    }
    SUBCASE("bilinearity") {
        TimesPoly c = random_times(rng, N, 2);
        CHECK(hirota_apply(a + c, b, {1, 1, 0}) ==
              hirota_apply(a, b, {1, 1, 0}) + hirota_apply(c, b, {1, 1, 0}));
    }
}

TEST_CASE("schur polynomials") {
    const int N = 3;
    CHECK(schur_p(0, N) == TimesPoly::constant(N, Rational(1)));
    CHECK(schur_p(1, N) == TimesPoly::variable(N, 0));

    // generating relation: j p_j = sum_k k t_k p_{j-k}
    for (int j = 1; j <= 6; ++j) {
        TimesPoly acc(N);
        for (int k = 1; k <= std::min(j, N); ++k)
            acc = acc + TimesPoly::variable(N, k - 1, Rational(k)) * schur_p(j - k, N);
        CHECK(Rational(j) * schur_p(j, N) == acc);
    }

    // partition (2,1) via the determinant: p1 p2 - p3
    TimesPoly expect = schur_p(1, N) * schur_p(2, N) - schur_p(3, N);
    CHECK(schur_partition({2, 1}, N) == expect);
}

TEST_CASE("bilinear kp residual") {
    const int N = 3;
    CHECK(kp_hirota_residual(TimesPoly::constant(N, Rational(1))).is_zero());
    CHECK(kp_hirota_residual(TimesPoly::variable(N, 0)).is_zero());
    CHECK(kp_hirota_residual(schur_partition({2, 1}, N)).is_zero());
    CHECK(kp_hirota_residual(schur_partition({2, 2}, N)).is_zero());
    // a non-solution leaves a nonzero residual: D1^4 (t1^4 . t1^4) = 144 t1^4
    TimesPoly t1 = TimesPoly::variable(N, 0);
    TimesPoly t14 = t1 * t1 * t1 * t1;
    CHECK(kp_hirota_residual(t14) == Rational(144) * t14);
}

TEST_CASE("tau argument shift") {
    QValue q2(Rational(2));
    const int N = 3;
    TimesPoly t1 = TimesPoly::variable(N, 0), t2 = TimesPoly::variable(N, 1);

    CHECK(qtau_shift(t1 * t2, Rational(0), q2) == t1 * t2);
    CHECK(qtau_shift(t1, Rational(1), q2) == t1 + TimesPoly::constant(N, Rational(1)));
    // second component of the shift sequence at q=2, x=1: (1-q)^2/(2(1-q^2)) = -1/6
    CHECK(qtau_shift(t2, Rational(1), q2) == t2 + TimesPoly::constant(N, Rational(-1, 6)));

    // shift is multiplicative over products of arguments
    TimesPoly tau = t1 * t1 + t2;
    TimesPoly s1 = qtau_shift(tau, Rational(2), q2);
    TimesPoly expect = qtau_shift(t1, Rational(2), q2) * qtau_shift(t1, Rational(2), q2) +
                       qtau_shift(t2, Rational(2), q2);
    CHECK(s1 == expect);
}
