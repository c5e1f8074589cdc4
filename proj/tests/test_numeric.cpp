#include <random>

#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "mzv/errors.hpp"
#include "mzv/numeric.hpp"

using namespace mzv;

namespace {

Real pi() { return boost::math::constants::pi<Real>(); }

bool close(const NumericValue& a, const NumericValue& b) {
    return abs(a.value - b.value) <= a.error_bound + b.error_bound;
}

bool close(const NumericValue& a, const Real& exact) { return abs(a.value - exact) <= a.error_bound; }

// Apery-type series, independent of the evaluator:
// zeta(3) = 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 C(2n, n)).
Real zeta3_oracle() {
    Real s = 0, c = 1;
    for (int n = 1; n <= 80; ++n) {
        c = c * (2 * n) * (2 * n - 1) / (Real(n) * n);
        const Real t = 1 / (Real(n) * n * n * c);
        s += (n % 2 ? t : -t);
    }
    return s * 5 / 2;
}

std::vector<int> random_admissible(std::mt19937& rng, int max_weight, int max_depth) {
    for (;;) {
        const int depth = std::uniform_int_distribution<int>(1, max_depth)(rng);
        std::vector<int> s(depth);
        int w = 0;
        for (int i = 0; i < depth; ++i) {
            s[i] = std::uniform_int_distribution<int>(i == 0 ? 2 : 1, 4)(rng);
            w += s[i];
        }
        if (w <= max_weight) return s;
    }
}

} // namespace

TEST_CASE("classical single zeta values") {
    const NumericValue z2 = mzv_eval({2}, {1e-12});
    CHECK(z2.error_bound <= Real(1e-12));
    CHECK(close(z2, pi() * pi() / 6));
    CHECK(z2.value_str(13) == "1.644934066848");
    CHECK(close(mzv_eval({4}, {1e-14}), pow(pi(), 4) / 90));
    CHECK(close(mzv_eval({3}, {1e-14}), zeta3_oracle()));
}

TEST_CASE("depth-two evaluations against closed forms") {
    const NumericOptions o{1e-14};
    const NumericValue z4 = mzv_eval({4}, o);
    CHECK(close(mzv_eval({2, 1}, o), mzv_eval({3}, o)));
    CHECK(close(mzv_eval({3, 1}, o), z4.scaled(Real(1) / 4)));
    CHECK(close(mzv_eval({2, 2}, o), z4.scaled(Real(3) / 4)));
    CHECK(abs(mzv_eval({3, 1}, {1e-8}).value - pow(pi(), 4) / 360) < Real(1e-8));
}

TEST_CASE("star values") {
    const NumericOptions o{1e-13};
    CHECK(close(mzv_star_eval({5}, o), mzv_eval({5}, o)));
    CHECK(close(mzv_star_eval({2, 1}, o), mzv_eval({2, 1}, o) + mzv_eval({3}, o)));
    const NumericValue lhs = mzv_star_eval({3, 1}, o) + mzv_star_eval({2, 2}, o);
    CHECK(close(lhs, mzv_eval({4}, o).scaled(3)));
}

TEST_CASE("numeric stuffle") {
    const NumericOptions o{1e-13};
    for (int r = 2; r <= 4; ++r) {
        for (int s = 2; s <= 4; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            const NumericValue lhs = mzv_eval({r}, o) * mzv_eval({s}, o);
            const NumericValue rhs = mzv_eval({r, s}, o) + mzv_eval({s, r}, o) + mzv_eval({r + s}, o);
            CHECK(close(lhs, rhs));
        }
    }
}

TEST_CASE("tail honesty: halving the target stays within both bounds") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<int> s = random_admissible(rng, 8, 3);
        CAPTURE(s.size());
        CHECK(close(mzv_eval(s, {1e-8}), mzv_eval(s, {5e-9})));
        CHECK(close(mzv_star_eval(s, {1e-8}), mzv_star_eval(s, {5e-9})));
        CHECK(close(qmzv_eval(s, Rational(3, 4), {1e-10}), qmzv_eval(s, Rational(3, 4), {5e-11})));
        CHECK(close(qmzv_star_eval(s, Rational(1, 2), {1e-10}), qmzv_star_eval(s, Rational(1, 2), {5e-11})));
    }
}

TEST_CASE("q-zeta values") {
    const Rational half(1, 2);
    const NumericValue a = qmzv_eval({2}, half, {1e-12});
    const NumericValue b = qmzv_eval({2}, half, {1e-20});
    CHECK(a.error_bound <= Real(1e-12));
    CHECK(abs(a.value - b.value) <= Real(1e-12));

    // direct oracle: sum q^n / [n]^2 in plain double precision
    double direct = 0, qn = 1;
    for (int n = 1; n < 200; ++n) {
        qn *= 0.5;
        const double br = (1 - qn) / 0.5;
        direct += qn / (br * br);
    }
    CHECK(abs(b.value - Real(direct)) < Real(1e-14));

    const NumericOptions o{1e-14};
    CHECK(close(qmzv_eval({2, 1}, half, o), qmzv_eval({3}, half, o)));
    CHECK(close(qmzv_star_eval({4}, half, o), qmzv_eval({4}, half, o)));

    // the non-strict sum adds the diagonal n_1 = n_2, whose terms are q^n / [n]^3
    double diag = 0;
    qn = 1;
    for (int n = 1; n < 200; ++n) {
        qn *= 0.5;
        const double br = (1 - qn) / 0.5;
        diag += qn / (br * br * br);
    }
    const NumericValue gap = qmzv_star_eval({2, 1}, half, o) - qmzv_eval({2, 1}, half, o);
    CHECK(abs(gap.value - Real(diag)) < Real(1e-14));
}

TEST_CASE("q-bracket approaches n as q tends to 1") {
    const Real q = 1 - Real(1e-6);
    for (long n : {1L, 2L, 10L, 50L}) CHECK(abs(q_bracket(n, q) - n) <= Real(1e-4) * n);
    CHECK(q_bracket(3, Real(0.5)) == Real(1.75));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(mzv_eval({1, 2}), DomainError);
    CHECK_THROWS_AS(mzv_eval({}), DomainError);
    CHECK_THROWS_AS(qmzv_eval({2}, Rational(1)), DomainError);
    NumericOptions tight{1e-40, 20};
    CHECK_THROWS_AS(mzv_eval({2}, tight), PrecisionUnreachable);
    try {
        mzv_eval({2}, tight);
    } catch (const PrecisionUnreachable& e) {
        CHECK(e.achieved() > 1e-40);
    }
}
