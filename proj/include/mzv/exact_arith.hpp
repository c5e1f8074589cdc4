#pragma once

#include <mutex>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Depth-one Hurwitz zeta at a non-positive integer is ambiguous at a = 0:
/// the Riemann convention gives zeta(0) = -1/2, the zero-inclusive one +1/2.
enum class ZetaConvention { Riemann, ZeroInclusive };

/// Memoized Bernoulli numbers with B_1 = -1/2, i.e. t/(e^t - 1) = sum B_k t^k/k!.
/// Safe for concurrent readers.
class BernoulliTable {
public:
    Rational operator()(int k);

    static BernoulliTable& global();

private:
    std::mutex mutex_;
    std::vector<Rational> cache_{Rational(1)};
};

Rational bernoulli(int k);

/// B_k(x) = sum_{i=0}^{k} C(k,i) B_{k-i} x^i.
Rational bernoulli_poly(int k, const Rational& x);

/// [a]_j = a(a-1)...(a-j+1); [a]_0 = 1; [a]_{-1} = 1/(a+1).
Rational falling_factorial(const Rational& a, int j);

/// zeta(-a; v) at a non-positive integer.
///   Riemann:       -B_{a+1}(v+1)/(a+1)
///   ZeroInclusive: -B_{a+1}(v)/(a+1)
Rational zeta1_neg(int a, const Rational& v = Rational(0),
                   ZetaConvention convention = ZetaConvention::Riemann);

} // namespace mzv
