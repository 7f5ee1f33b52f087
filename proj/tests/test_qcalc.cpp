#include "qkp/qcalc.hpp"

#include <doctest.h>

using namespace qkp;

TEST_CASE("deformation parameter validation") {
    CHECK_THROWS_AS(QValue(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(QValue(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(QValue(Rational(-1)), std::invalid_argument);
    CHECK_NOTHROW(QValue(Rational(3, 2)));
    CHECK(QValue::parse("3/2").value() == Rational(3, 2));
    CHECK(QValue(Rational(2)).reciprocal().value() == Rational(1, 2));
}

TEST_CASE("q-integers") {
    QValue q32(Rational(3, 2));
    CHECK(qint(1, q32) == Rational(1));
    CHECK(qint(0, q32) == Rational(0));
    // oracle: (2)_q = 1 + q evaluated exactly
    CHECK(qint(2, q32) == Rational(5, 2));
    CHECK(qint(-1, q32) == (q32.value().pow(-1) - Rational(1)) / (q32.value() - Rational(1)));

    // addition law (n+m)_q = (n)_q + q^n (m)_q
    for (long n = -8; n <= 8; ++n)
        for (long m = -8; m <= 8; ++m)
            CHECK(qint(n + m, q32) == qint(n, q32) + q32.value().pow(n) * qint(m, q32));
}

TEST_CASE("bracket q-binomials") {
    QValue q2(Rational(2)), q32(Rational(3, 2));
    CHECK(qbinom_bracket(7, 0, q2) == Rational(1));
    CHECK(qbinom_bracket(-4, 0, q32) == Rational(1));
    CHECK(qbinom_bracket(3, 1, q2) == Rational(7));  // (3)_2 = (2^3-1)/(2-1)
    // negative upper index: direct exact evaluation
    CHECK(qbinom_bracket(-1, 2, q32) == qint(-1, q32) * qint(-2, q32) / qfactorial(2, q32));
    // the same value drives the negative-order reordering: [-1 k]_q =
    // (-1)^k q^{-k(k+1)/2}
    for (long k = 0; k <= 5; ++k) {
        Rational expect = q32.value().pow(-k * (k + 1) / 2);
        if (k % 2 == 1) expect = -expect;
        CHECK(qbinom_bracket(-1, k, q32) == expect);
    }
}

TEST_CASE("q-pochhammer and gaussian binomial") {
    QValue q2(Rational(2)), q32(Rational(3, 2));
    CHECK(qpochhammer(Rational(1, 3), q2, 0) == Rational(1));
    CHECK(qpochhammer(Rational(1), q2, 2) == Rational(0));
    CHECK(qbinom_gauss(5, 0, q2) == Rational(1));
    CHECK(qbinom_gauss(2, 1, q2) == Rational(3));  // (1-q^2)/(1-q) = 1+q
    // (4,2): expand the Pochhammer ratio symbolically first, then evaluate
    UniPoly poly = qbinom_gauss_poly(4, 2);
    CHECK(poly.coeffs() == std::vector<Rational>{Rational(1), Rational(1), Rational(2), Rational(1), Rational(1)});
    CHECK(qbinom_gauss(4, 2, q32) == poly.eval(Rational(3, 2)));
    CHECK_THROWS_AS(qbinom_gauss(2, 3, q2), std::invalid_argument);

    // gauss == bracket form on 0 <= k <= n <= 8 for several q
    for (const Rational& qv : {Rational(2), Rational(3, 2), Rational(5, 7)}) {
        QValue q(qv);
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= n; ++k) CHECK(qbinom_gauss(n, k, q) == qbinom_bracket(n, k, q));
    }

    // q -> 1 limit of the symbolic polynomial is the plain binomial
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(qbinom_gauss_poly(n, k).eval(Rational(1)) == binom_generalized(n, k));
}

TEST_CASE("binomial convolution identity") {
    CHECK(check_binomial_convolution(2, 1, 1, 1));  // both sides 4
    CHECK(check_binomial_convolution(3, -2, 0, 0));
    for (long n = -4; n <= 4; ++n)
        for (long r = -4; r <= 4; ++r)
            for (long g = 0; g <= 4; ++g)
                for (long m = 0; m <= 4; ++m) CHECK(check_binomial_convolution(n, r, g, m));
}

TEST_CASE("q-exponential coefficients") {
    QValue q2(Rational(2));
    auto c = qexp_coeffs(12, q2);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(1));  // (1-q)/(1-q)
    auto r = qexp_recip_coeffs(12, q2);
    CHECK(r[0] == Rational(1));

    // series multiplication oracle: exp_q(y) exp_{1/q}(-y) = 1 through y^12
    for (const Rational& qv : {Rational(2), Rational(3, 2)}) {
        QValue q(qv);
        auto a = qexp_coeffs(12, q);
        auto b = qexp_recip_coeffs(12, q);
        for (std::size_t k = 0; k <= 12; ++k) {
            Rational conv(0);
            for (std::size_t i = 0; i <= k; ++i) conv += a[i] * b[k - i];
            CHECK(conv == (k == 0 ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("exact univariate polynomial division") {
    UniPoly x = UniPoly::variable();
    UniPoly num = (x * x - UniPoly(Rational(1)));
    UniPoly den = x - UniPoly(Rational(1));
    CHECK(num.divide_exact(den) == x + UniPoly(Rational(1)));
    CHECK_THROWS_AS((void)num.divide_exact(x - UniPoly(Rational(2))), std::domain_error);
}
