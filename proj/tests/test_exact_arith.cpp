#include "doctest.h"

#include "mzv/errors.hpp"
#include "mzv/exact_arith.hpp"

using namespace mzv;

namespace {

// Coefficients of t/(e^t - 1) by inverting (e^t - 1)/t = sum t^k/(k+1)!,
// independent of the recurrence used by the library.
std::vector<Rational> bernoulli_by_series(int n) {
    std::vector<Rational> u(n + 1), b(n + 1);
    for (int k = 0; k <= n; ++k) u[k] = Rational(1) / Rational(factorial(k + 1));
    b[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational s;
        for (int k = 1; k <= m; ++k) s += u[k] * b[m - k];
        b[m] = -s;
    }
    for (int k = 0; k <= n; ++k) b[k] *= Rational(factorial(k));
    return b;
}

} // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    auto oracle = bernoulli_by_series(40);
    for (int k = 0; k <= 40; ++k) CHECK(bernoulli(k) == oracle[k]);
    for (int k = 1; k <= 20; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
}

TEST_CASE("binomial sum identity for k up to 40") {
    for (int k = 2; k <= 40; ++k) {
        Rational s;
        for (int i = 0; i <= k; ++i) s += Rational(binomial(k, i)) * bernoulli(i);
        CHECK(s == bernoulli(k));
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(1, Rational(5)) == Rational(9, 2));
    CHECK(bernoulli_poly(3, Rational(2)) == Rational(3));
    for (int k = 2; k <= 30; ++k) {
        CHECK(bernoulli_poly(k, Rational(0)) == bernoulli(k));
        CHECK(bernoulli_poly(k, Rational(1)) == bernoulli(k));
    }
}

TEST_CASE("faulhaber against brute force power sums") {
    for (int d = 0; d <= 6; ++d) {
        for (int n = 1; n <= 8; ++n) {
            Rational brute(d == 0 ? 1 : 0);
            for (int m = 1; m < n; ++m) brute += Rational(m).pow(d);
            Rational f = (bernoulli_poly(d + 1, Rational(n)) - bernoulli(d + 1)) / Rational(d + 1);
            CHECK(f == brute);
        }
    }
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(Rational(4), 2) == Rational(12));
    CHECK(falling_factorial(Rational(7), 0) == Rational(1));
    CHECK(falling_factorial(Rational(0), -1) == Rational(1));
    CHECK(falling_factorial(Rational(3), -1) == Rational(1, 4));
    CHECK_THROWS_AS(falling_factorial(Rational(-1), -1), DivisionByZero);
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(zeta1_neg(1) == Rational(-1, 12));
    CHECK(zeta1_neg(0) == Rational(-1, 2));
    CHECK(zeta1_neg(0, Rational(0), ZetaConvention::ZeroInclusive) == Rational(1, 2));
    CHECK(zeta1_neg(3) == Rational(1, 120));
    CHECK(zeta1_neg(3, Rational(0), ZetaConvention::ZeroInclusive) == Rational(1, 120));
    for (int a = 1; a <= 20; ++a)
        CHECK(zeta1_neg(a) == zeta1_neg(a, Rational(0), ZetaConvention::ZeroInclusive));
    CHECK(zeta1_neg(0, Rational(0), ZetaConvention::ZeroInclusive) - zeta1_neg(0) == Rational(1));
    // Hurwitz shift: zeta(-a; v) - zeta(-a; v+1) = (v+1)^a in the Riemann convention
    for (int a = 0; a <= 5; ++a)
        CHECK(zeta1_neg(a, Rational(1, 3)) - zeta1_neg(a, Rational(4, 3)) == Rational(4, 3).pow(a));
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("-3/6").str() == "-1/2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}
