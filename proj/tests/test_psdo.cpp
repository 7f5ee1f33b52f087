#include "qkp/prng.hpp"
#include "qkp/psdo.hpp"
#include "qkp/textio.hpp"

#include <doctest.h>

using namespace qkp;

namespace {

XSeries coeff_series(long xexp, int power, int depth, Rational kappa = Rational(1)) {
    XSeries A(power, depth, std::move(kappa));
    A.s.set(power, XLaurent::monomial(xexp));
    return A;
}

XSeries random_series(Prng& rng, int top_max, int depth, const Rational& kappa) {
    int top = static_cast<int>(rng.range(0, top_max));
    XSeries A(top, depth, kappa);
    for (int p = top; p > top - depth; --p)
        if (rng.next() % 3 != 0) A.s.set(p, rng.xlaurent(-2, 3));
    if (A.s.is_zero()) A.s.set(top, XLaurent(1));
    return A;
}

// plain antiderivative on the monomial basis, used as the total-derivative
// oracle below
XLaurent ddx_inverse(const XLaurent& f) {
    XLaurent out;
    for (const auto& [e, c] : f.terms()) {
        REQUIRE(e != -1);
        out.add_term(e + 1, c / Rational(e + 1));
    }
    return out;
}

}  // namespace

TEST_CASE("symbol composition basics") {
    // xi o x = x xi + kappa
    for (const Rational& kap : {Rational(1), Rational(1, 2)}) {
        XSeries xi = XSeries::symbol_power(1, 4, kap);
        XSeries x = coeff_series(1, 0, 4, kap);
        XSeries prod = compose(xi, x);
        CHECK(prod.s.coeff(1) == XLaurent::monomial(1));
        CHECK(prod.s.coeff(0) == XLaurent(Rational(0) + kap));
        // x o xi = x xi, no correction
        XSeries prod2 = compose(x, xi);
        CHECK(prod2.s.coeff(1) == XLaurent::monomial(1));
        CHECK(prod2.s.coeff(0).is_zero());
    }

    // kappa mismatch is rejected
    CHECK_THROWS_AS(compose(XSeries::symbol_power(1, 3, Rational(1)),
                            XSeries::symbol_power(1, 3, Rational(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("negative order reordering") {
    // xi^-1 o u = u xi^-1 - u' xi^-2 + u'' xi^-3 - ...
    XLaurent u = parse_xlaurent("x^3 + 2*x");
    XSeries inv = XSeries::symbol_power(-1, 4, Rational(1));
    XSeries us(0, 4, Rational(1));
    us.s.set(0, u);
    XSeries prod = compose(inv, us);
    XLaurent du = ddx(u), ddu = ddx(du);
    CHECK(prod.s.coeff(-1) == u);
    CHECK(prod.s.coeff(-2) == -du);
    CHECK(prod.s.coeff(-3) == ddu);

    // xi o (xi^-1 o u) telescopes back to multiplication by u, modulo tail
    XSeries xi = XSeries::symbol_power(1, 4, Rational(1));
    XSeries round = compose(xi, prod);
    XSeries expect(0, 3, Rational(1));
    expect.s.set(0, u);
    CHECK(equal_mod_tail(round.s, expect.s));
}

TEST_CASE("commutators") {
    XSeries xi = XSeries::symbol_power(1, 5, Rational(1));
    XSeries xi2 = XSeries::symbol_power(2, 5, Rational(1));
    XSeries x = coeff_series(1, 0, 5);
    CHECK(commutator(xi, x).s.coeff(0) == XLaurent(1));     // [xi, x] = 1
    CHECK(commutator(xi2, x).s.coeff(1) == XLaurent(2));    // [xi^2, x] = 2 xi
    CHECK(commutator(xi2, x).s.coeff(0).is_zero());
    CHECK(commutator(x, x).s.is_zero_mod_tail());
}

TEST_CASE("adjoint") {
    XSeries xi = XSeries::symbol_power(1, 4, Rational(1));
    CHECK(equal_mod_tail(adjoint(xi).s, xi.s.negated()));
    XSeries u = coeff_series(2, 0, 4);
    CHECK(equal_mod_tail(adjoint(u).s, u.s));

    Prng rng(3);
    for (int i = 0; i < 30; ++i) {
        XSeries A = random_series(rng, 2, 5, Rational(1));
        CHECK(equal_mod_tail(adjoint(adjoint(A)).s, A.s));
        XSeries B = random_series(rng, 2, 5, Rational(1));
        CHECK(equal_mod_tail(adjoint(compose(A, B)).s, compose(adjoint(B), adjoint(A)).s));
    }
}

TEST_CASE("residue and projections") {
    XSeries inv = XSeries::symbol_power(-1, 3, Rational(1));
    CHECK(res_partial(inv) == XLaurent(1));

    Prng rng(9);
    for (int i = 0; i < 20; ++i) {
        XSeries A = random_series(rng, 3, 6, Rational(1));
        XSeries sum(plus_part(A).s + minus_part(A).s, A.kappa);
        CHECK(equal_mod_tail(sum.s, A.s));
        // idempotence
        CHECK(equal_mod_tail(plus_part(plus_part(A)).s, plus_part(A).s));
        CHECK(equal_mod_tail(minus_part(minus_part(A)).s, minus_part(A).s));
        CHECK(plus_part(minus_part(A)).s.is_zero_mod_tail());
    }

    // power with n = 0 is the identity series
    XSeries A = random_series(rng, 2, 4, Rational(1));
    CHECK(equal_mod_tail(power(A, 0).s, XSeries::identity(4, Rational(1)).s));
}

TEST_CASE("associativity and jacobi modulo tail") {
    Prng rng(21);
    for (const Rational& kap : {Rational(1), Rational(1, 2)}) {
        for (int i = 0; i < 30; ++i) {
            XSeries A = random_series(rng, 3, 6, kap);
            XSeries B = random_series(rng, 3, 6, kap);
            XSeries C = random_series(rng, 3, 6, kap);
            CHECK(equal_mod_tail(compose(compose(A, B), C).s, compose(A, compose(B, C)).s));
            WindowSeries<XLaurent> jac = commutator(commutator(A, B), C).s +
                                         commutator(commutator(C, A), B).s +
                                         commutator(commutator(B, C), A).s;
            CHECK(jac.is_zero_mod_tail());
        }
    }
}

TEST_CASE("residue of a commutator is a total derivative") {
    Prng rng(33);
    for (int i = 0; i < 20; ++i) {
        // exact finite symbols, deepened so the residue slot is exact
        XSeries A = random_series(rng, 2, 4, Rational(1));
        XSeries B = random_series(rng, 2, 4, Rational(1));
        int need = -1 - std::max(A.s.effective_top(), B.s.effective_top());
        XSeries Ad(A.s.deepened(std::min(A.s.low(), need - 4)), A.kappa);
        XSeries Bd(B.s.deepened(std::min(B.s.low(), need - 4)), B.kappa);
        XLaurent res = res_partial(commutator(Ad, Bd));
        CHECK(res.coeff(-1).is_zero());  // no obstruction to integration
        CHECK(ddx(ddx_inverse(res)) == res);
    }
}

TEST_CASE("kp lax flows") {
    DSeries L = make_lax_kp(6);
    SUBCASE("first flow acts as d/dx") {
        DSeries F = kp_flow_rhs(L, 1);
        CHECK(F.s.effective_top() <= -1);
        for (int i = 2; -(i - 1) >= F.s.low(); ++i) CHECK(F.s.coeff(-(i - 1)) == DPoly::generator(i, 1));
    }
    SUBCASE("second flow matches the hand-derived equations") {
        DSeries F = kp_flow_rhs(L, 2);
        // d2 u2 = u2'' + 2 u3'
        CHECK(F.s.coeff(-1) == ddx_iter(DPoly::generator(2, 0), 2) + Rational(2) * DPoly::generator(3, 1));
        // d2 u3 = u3'' + 2 u4' + 2 u2 u2'
        CHECK(F.s.coeff(-2) == ddx_iter(DPoly::generator(3, 0), 2) + Rational(2) * DPoly::generator(4, 1) +
                                   Rational(2) * (DPoly::generator(2, 0) * DPoly::generator(2, 1)));
    }
    SUBCASE("top power cancels for n = 1..3") {
        for (int n = 1; n <= 3; ++n) CHECK(kp_flow_rhs(L, n).s.effective_top() <= -1);
    }
    SUBCASE("squared lax operator, low slots against the hand expansion") {
        // L^2 = xi^2 + 2 u2 + (2 u3 + u2') xi^-1 + ...
        DSeries L2 = power(L, 2);
        CHECK(L2.s.coeff(0) == Rational(2) * DPoly::generator(2, 0));
        CHECK(res_partial(L2) ==
              Rational(2) * DPoly::generator(3, 0) + DPoly::generator(2, 1));
    }
}

TEST_CASE("flow commutativity") {
    CHECK(flow_commutativity_check(1, 2, 5));
    CHECK(flow_commutativity_check(2, 2, 5));
    CHECK(flow_commutativity_check(2, 3, 6));
    CHECK_THROWS_AS(flow_commutativity_check(2, 3, 3), std::invalid_argument);
}

TEST_CASE("flow derivation rejects unknown generators") {
    DSeries L = make_lax_kp(3);
    FlowDerivation d = kp_flow_derivation(L, 1);
    CHECK(d.apply(DPoly::generator(2, 0)) == DPoly::generator(2, 1));
    CHECK_THROWS_AS((void)d.apply(DPoly::generator(9, 0)), std::out_of_range);
}

TEST_CASE("dickey residue lemma") {
    Rational kap(1);
    XSeries one = XSeries::identity(4, kap);
    CHECK(dickey_lemma_check(one, one));

    XSeries inv = XSeries::symbol_power(-1, 4, kap);
    CHECK(dickey_lemma_check(inv, one));
    CHECK(res_partial(compose(inv, adjoint(one))) == XLaurent(1));

    Prng rng(41);
    for (const Rational& k2 : {Rational(1), Rational(1, 2)})
        for (int i = 0; i < 25; ++i) {
            XSeries P = random_series(rng, 2, 4, k2);
            XSeries Q = random_series(rng, 2, 4, k2);
            CHECK(dickey_lemma_check(P, Q));
        }
}
