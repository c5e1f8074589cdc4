#include "mzv/exact_arith.hpp"

#include "mzv/errors.hpp"

namespace mzv {

Rational BernoulliTable::operator()(int k) {
    if (k < 0) throw DomainError("Bernoulli index must be non-negative");
    std::lock_guard lock(mutex_);
    // sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1
    while (static_cast<int>(cache_.size()) <= k) {
        const int m = static_cast<int>(cache_.size());
        if (m >= 3 && m % 2 == 1) {
            cache_.emplace_back(0);
            continue;
        }
        Rational acc;
        for (int i = 0; i < m; ++i) {
            if (cache_[i].is_zero()) continue;
            acc += Rational(binomial(m + 1, i)) * cache_[i];
        }
        cache_.push_back(-acc / Rational(m + 1));
    }
    return cache_[k];
}

BernoulliTable& BernoulliTable::global() {
    static BernoulliTable table;
    return table;
}

Rational bernoulli(int k) { return BernoulliTable::global()(k); }

Rational bernoulli_poly(int k, const Rational& x) {
    if (k < 0) throw DomainError("Bernoulli polynomial degree must be non-negative");
    // Horner in x over the coefficients C(k,i) B_{k-i}
    Rational acc;
    for (int i = k; i >= 0; --i) {
        acc = acc * x + Rational(binomial(k, i)) * bernoulli(k - i);
    }
    return acc;
}

Rational falling_factorial(const Rational& a, int j) {
    if (j < -1) throw DomainError("falling factorial order must be >= -1");
    if (j == -1) {
        if ((a + Rational(1)).is_zero()) throw DivisionByZero("[a]_{-1} at a = -1");
        return (a + Rational(1)).inverse();
    }
    Rational acc(1);
    for (int i = 0; i < j; ++i) acc *= a - Rational(i);
    return acc;
}

Rational zeta1_neg(int a, const Rational& v, ZetaConvention convention) {
    if (a < 0) throw DomainError("zeta1_neg expects a >= 0");
    const Rational x = convention == ZetaConvention::Riemann ? v + Rational(1) : v;
    return -bernoulli_poly(a + 1, x) / Rational(a + 1);
}

} // namespace mzv
