#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "mzv/exact_arith.hpp"
#include "mzv/laurent.hpp"

namespace mzv {

/// Rational expansions of the geometric kernels in u:
///   L(u) = 1/(1 - e^u)   = sum_{k>=0} e^{ku}
///   K(u) = e^u/(1 - e^u) = sum_{k>=1} e^{ku} = L(u) - 1
/// and their u-derivatives, which are the weighted sums sum k^d e^{ku}.
class KernelCache {
public:
    /// d-th derivative of L, exponents below `trunc`.
    Laurent L(int d, int trunc);
    /// d-th derivative of K, exponents below `trunc`.
    Laurent K(int d, int trunc);

    static KernelCache& global();

private:
    Laurent base(int trunc);
    std::mutex mutex_;
    Laurent base_ = Laurent::zero(0);
    std::map<std::pair<int, int>, Laurent> derived_;
};

/// Finite sum of terms c * n^d * e^{mu n eps}, c a Laurent series in eps.
template <class F>
class ExpPoly {
public:
    using Series = LaurentSeries<F>;
    using Key = std::pair<int, F>;  // (degree d, rate mu)

    ExpPoly() = default;
    static ExpPoly term(const Series& c, int d, const F& mu) {
        ExpPoly p;
        p.add(c, d, mu);
        return p;
    }
    /// n^d e^{mu n eps} with coefficient 1.
    static ExpPoly monomial(int d, const F& mu) { return term(Series(F(1)), d, mu); }

    void add(const Series& c, int d, const F& mu) {
        if (d < 0) throw DomainError("negative degree in an exponential polynomial");
        if (c.is_zero() && c.is_exact()) return;
        auto [it, fresh] = t_.try_emplace(Key{d, mu}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero() && it->second.is_exact()) t_.erase(it);
        }
    }

    const std::map<Key, Series>& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }

    ExpPoly& operator+=(const ExpPoly& o) {
        for (const auto& [k, c] : o.t_) add(c, k.first, k.second);
        return *this;
    }
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) {
        for (const auto& [k, c] : b.t_) a.add(-c, k.first, k.second);
        return a;
    }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) r.add(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }

    /// Truncates every coefficient at eps^trunc.
    ExpPoly truncated(int trunc) const {
        ExpPoly r;
        for (const auto& [k, c] : t_) r.add(c.truncated(trunc), k.first, k.second);
        return r;
    }

    /// Coefficient-wise comparison below the common truncation order.
    friend bool equal_at_common_trunc(const ExpPoly& a, const ExpPoly& b) {
        std::map<Key, Series> keys;
        for (const auto& [k, c] : a.t_) keys.emplace(k, Series());
        for (const auto& [k, c] : b.t_) keys.emplace(k, Series());
        for (const auto& [k, unused] : keys) {
            auto ia = a.t_.find(k), ib = b.t_.find(k);
            const Series sa = ia == a.t_.end() ? Series() : ia->second;
            const Series sb = ib == b.t_.end() ? Series() : ib->second;
            if (!equal_at_common_trunc(sa, sb)) return false;
        }
        return true;
    }

private:
    std::map<Key, Series> t_;
};

/// Series of K^{(d)}(mu eps) in the field F, exponents below `trunc`.
template <class F>
LaurentSeries<F> kernel_K(int d, const F& mu, int trunc) {
    if (mu.is_zero()) throw DomainError("divergent sum: zero rate");
    return lift<F>(KernelCache::global().K(d, trunc)).rescaled(mu);
}

template <class F>
LaurentSeries<F> kernel_L(int d, const F& mu, int trunc) {
    if (mu.is_zero()) throw DomainError("divergent sum: zero rate");
    return lift<F>(KernelCache::global().L(d, trunc)).rescaled(mu);
}

/// Strict partial sum: g(n) = sum_{m=1}^{n-1} f(m) as an exponential polynomial.
/// Kernels are expanded with exponents below `trunc`.
template <class F>
ExpPoly<F> qsum_strict(const ExpPoly<F>& f, int trunc) {
    ExpPoly<F> g;
    for (const auto& [key, c] : f.terms()) {
        const auto& [d, mu] = key;
        if (mu.is_zero()) {
            // Faulhaber: sum_{m=1}^{n-1} m^d = (B_{d+1}(n) - B_{d+1})/(d+1) - [d = 0]
            for (int i = 1; i <= d + 1; ++i) {
                Rational k = Rational(binomial(d + 1, i)) * bernoulli(d + 1 - i) / Rational(d + 1);
                if (!k.is_zero()) g.add(c.scaled(F(k)), i, mu);
            }
            if (d == 0) g.add(-c, 0, mu);
            continue;
        }
        // sum_{m=1}^{n-1} m^d e^{mu m eps} = K^{(d)}(mu eps) - e^{mu n eps} sum_j C(d,j) n^j L^{(d-j)}(mu eps)
        g.add(c * kernel_K(d, mu, trunc), 0, F());
        for (int j = 0; j <= d; ++j)
            g.add(-(c * kernel_L(d - j, mu, trunc)).scaled(F(Rational(binomial(d, j)))), j, mu);
    }
    return g;
}

/// sum_{n>=1} f(n) as a Laurent series; every rate must be nonzero.
template <class F>
LaurentSeries<F> full_sum(const ExpPoly<F>& f, int trunc) {
    LaurentSeries<F> s;
    for (const auto& [key, c] : f.terms()) {
        const auto& [d, mu] = key;
        if (mu.is_zero()) throw DomainError("divergent sum: a term has zero rate");
        s += c * kernel_K(d, mu, trunc);
    }
    return s;
}

/// Substitutes an integer n, expanding e^{mu n eps} below `trunc`.
template <class F>
LaurentSeries<F> evaluate_at(const ExpPoly<F>& f, long n, int trunc) {
    LaurentSeries<F> s;
    for (const auto& [key, c] : f.terms()) {
        const auto& [d, mu] = key;
        const F nd(Rational(mpz_class(n)).pow(d));
        s += c.scaled(nd) * exp_linear(mu * F(Rational(mpz_class(n))), trunc);
    }
    return s;
}

/// A letter <s, r> of the regularized sum: summand n^{-s} e^{n r eps}.
template <class F>
struct SumLetter {
    int s;
    F r;
};

template <class F>
bool positive_direction(const F& r);

template <>
inline bool positive_direction<Rational>(const Rational& r) { return r.sign() > 0; }

/// A direction in Q(delta) counts as positive when its value at delta = 0 is
/// positive, or when it vanishes there and is positive for small delta > 0.
template <>
inline bool positive_direction<RatFunc>(const RatFunc& r) {
    if (r.is_zero()) return false;
    if (!r.den().coeff(0).is_zero()) {
        const Rational v0 = r.num().coeff(0) / r.den().coeff(0);
        if (!v0.is_zero()) return v0.sign() > 0;
    }
    return r.sign_near_zero() > 0;
}

/// Z(<s, r>; eps) = sum_{n_1 > ... > n_k > 0} prod n_i^{-s_i} e^{n_i r_i eps}, s_i <= 0,
/// returned with exponents below `trunc`.
template <class F>
LaurentSeries<F> nested_regularized_sum(const std::vector<SumLetter<F>>& word, int trunc) {
    if (word.empty()) return LaurentSeries<F>(F(1));
    int budget = 0;
    for (const auto& l : word) {
        if (l.s > 0) throw DomainError("regularized sums are implemented for s <= 0 only");
        if (!positive_direction(l.r)) throw DomainError("directions must be positive");
        budget += 1 - l.s;
    }
    const int kt = trunc + budget;
    const std::size_t k = word.size();
    ExpPoly<F> f = ExpPoly<F>::monomial(-word[k - 1].s, word[k - 1].r);
    for (std::size_t j = k - 1; j-- > 0;) f = ExpPoly<F>::monomial(-word[j].s, word[j].r) * qsum_strict(f, kt);
    LaurentSeries<F> z = full_sum(f, kt);
    if (z.trunc() < trunc) throw PrecisionError("kernel budget too small for the requested truncation");
    return z.truncated(trunc);
}

} // namespace mzv
