#include "mzv/sum_engine.hpp"

namespace mzv {

KernelCache& KernelCache::global() {
    static KernelCache cache;
    return cache;
}

Laurent KernelCache::base(int trunc) {
    if (base_.trunc() >= trunc) return base_.truncated(trunc);
    // L(u) = -1/(u U(u)) with the unit U(u) = (e^u - 1)/u = sum u^k/(k+1)!
    const int want = trunc + 8;
    Laurent unit = Laurent::zero(want + 1);
    Rational fact(1);
    for (int k = 0; k <= want; ++k) {
        fact *= Rational(k + 1);
        unit.set(k, fact.inverse());
    }
    base_ = Laurent::monomial(Rational(-1), -1) * unit.inv_unit();
    derived_.clear();
    return base_.truncated(trunc);
}

Laurent KernelCache::L(int d, int trunc) {
    std::lock_guard lock(mutex_);
    auto it = derived_.find({d, 0});
    if (it != derived_.end() && it->second.trunc() >= trunc) return it->second.truncated(trunc);
    Laurent s = base(trunc + d + 8);
    for (int i = 0; i < d; ++i) s = s.d_epsilon();
    derived_[{d, 0}] = s;
    return s.truncated(trunc);
}

Laurent KernelCache::K(int d, int trunc) {
    Laurent s = L(d, trunc);
    if (d == 0) s -= Laurent(Rational(1));
    return s;
}

} // namespace mzv
