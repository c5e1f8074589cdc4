#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"
#include "mzv/ratfunc.hpp"

namespace mzv {

/// Truncated Laurent series sum_e c_e eps^e over a field F (Rational or RatFunc).
///
/// trunc() = T means every exponent >= T is unknown. Exact series (finite
/// Laurent polynomials) carry T = kExact; truncation arithmetic saturates there.
template <class F>
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() = default;
    explicit LaurentSeries(const F& c, int trunc = kExact) : trunc_(trunc) {
        if (!c.is_zero() && 0 < trunc) c_.emplace(0, c);
    }

    static LaurentSeries zero(int trunc = kExact) {
        LaurentSeries s;
        s.trunc_ = trunc;
        return s;
    }
    static LaurentSeries monomial(const F& c, int e, int trunc = kExact) {
        LaurentSeries s = zero(trunc);
        if (!c.is_zero() && e < trunc) s.c_.emplace(e, c);
        return s;
    }

    const std::map<int, F>& terms() const noexcept { return c_; }
    int trunc() const noexcept { return trunc_; }
    bool is_exact() const noexcept { return trunc_ >= kExact; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Least stored exponent; the truncation order for a zero series.
    int valuation() const { return c_.empty() ? trunc_ : c_.begin()->first; }

    F coeff(int e) const {
        if (e >= trunc_) throw PrecisionError("coefficient of eps^" + std::to_string(e) +
                                              " is beyond the truncation order " +
                                              std::to_string(trunc_));
        auto it = c_.find(e);
        return it == c_.end() ? F() : it->second;
    }

    void set(int e, const F& v) {
        if (e >= trunc_) return;
        if (v.is_zero()) c_.erase(e);
        else c_[e] = v;
    }

    /// Forgets all exponents >= t.
    LaurentSeries truncated(int t) const {
        if (t >= trunc_) return *this;
        LaurentSeries r = *this;
        r.trunc_ = t;
        r.c_.erase(r.c_.lower_bound(t), r.c_.end());
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& [e, v] : r.c_) v = -v;
        return r;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) {
        if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
        for (const auto& [e, v] : o.c_) {
            if (e >= trunc_) break;
            auto [it, fresh] = c_.try_emplace(e, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) c_.erase(it);
            }
        }
        return *this;
    }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this += -o; }

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const int t = std::min(sat_add(a.trunc_, b.valuation()), sat_add(b.trunc_, a.valuation()));
        LaurentSeries r = zero(t);
        std::map<int, F> acc;
        for (const auto& [ea, va] : a.c_) {
            for (const auto& [eb, vb] : b.c_) {
                const int e = ea + eb;
                if (e >= t) break;
                auto [it, fresh] = acc.try_emplace(e, va);
                if (fresh) it->second *= vb;
                else it->second += va * vb;
            }
        }
        for (auto& [e, v] : acc)
            if (!v.is_zero()) r.c_.emplace(e, std::move(v));
        return r;
    }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries scaled(const F& k) const {
        if (k.is_zero()) return zero(trunc_);
        LaurentSeries r = *this;
        for (auto& [e, v] : r.c_) v *= k;
        return r;
    }

    /// Multiplicative inverse. The leading coefficient must be a unit; an
    /// exact input needs an explicit output truncation.
    LaurentSeries inv_unit(std::optional<int> trunc = std::nullopt) const {
        if (c_.empty()) throw NonInvertible("series is zero up to its truncation order");
        const int v = valuation();
        int t = is_exact() ? kExact : trunc_ - 2 * v;
        if (trunc) t = std::min(t, *trunc);
        if (t >= kExact) throw NonInvertible("inverse of an exact series needs a truncation order");
        const int count = t + v;  // coefficients of the normalized inverse
        LaurentSeries r = zero(t);
        if (count <= 0) return r;
        std::vector<F> u(count), b(count);
        for (const auto& [e, c] : c_) {
            if (e - v >= count) break;
            u[e - v] = c;
        }
        const F inv0 = F(1) / u[0];
        b[0] = inv0;
        for (int n = 1; n < count; ++n) {
            F s;
            for (int k = 1; k <= n; ++k)
                if (!u[k].is_zero() && !b[n - k].is_zero()) s += u[k] * b[n - k];
            b[n] = -(s * inv0);
        }
        for (int n = 0; n < count; ++n)
            if (!b[n].is_zero()) r.c_.emplace(n - v, std::move(b[n]));
        return r;
    }

    /// Minimal subtraction: strictly negative exponents only.
    LaurentSeries pi_minus() const {
        if (trunc_ < 0) throw PrecisionError("pole part undetermined: truncation order " +
                                             std::to_string(trunc_) + " < 0");
        LaurentSeries r;
        for (auto it = c_.begin(); it != c_.end() && it->first < 0; ++it) r.c_.insert(*it);
        return r;
    }
    LaurentSeries pi_plus() const { return *this - pi_minus(); }

    F finite_part() const {
        if (trunc_ < 1) throw PrecisionError("finite part undetermined: truncation order " +
                                             std::to_string(trunc_) + " < 1");
        return coeff(0);
    }

    LaurentSeries d_epsilon() const {
        LaurentSeries r = zero(is_exact() ? kExact : trunc_ - 1);
        for (const auto& [e, v] : c_)
            if (e != 0) r.c_.emplace(e - 1, v * F(e));
        return r;
    }

    /// eps -> mu*eps, i.e. coefficient e is multiplied by mu^e.
    LaurentSeries rescaled(const F& mu) const {
        if (mu.is_zero()) throw DomainError("rescaling by zero");
        LaurentSeries r = *this;
        if (r.c_.empty()) return r;
        const F inv = F(1) / mu;
        F pos(1), neg(1);
        int pe = 0, ne = 0;
        for (auto& [e, v] : r.c_) {
            if (e >= 0) {
                while (pe < e) { pos *= mu; ++pe; }
                v *= pos;
            }
        }
        for (auto it = r.c_.rbegin(); it != r.c_.rend(); ++it) {
            if (it->first < 0) {
                while (ne < -it->first) { neg *= inv; ++ne; }
                it->second *= neg;
            }
        }
        return r;
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    /// Coefficient-wise equality below the common truncation order.
    friend bool equal_at_common_trunc(const LaurentSeries& a, const LaurentSeries& b) {
        const int t = std::min(a.trunc_, b.trunc_);
        return a.truncated(t).c_ == b.truncated(t).c_;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << v << ')';
            if (e != 0) os << "*eps^" << e;
        }
        if (!is_exact()) os << (first ? "" : " + ") << "O(eps^" << trunc_ << ')';
        if (first && is_exact()) os << '0';
        return os.str();
    }

    static int sat_add(int a, int b) {
        if (a >= kExact || b >= kExact) return kExact;
        return std::min(a + b, kExact);
    }

private:
    std::map<int, F> c_;
    int trunc_ = kExact;
};

using Laurent = LaurentSeries<Rational>;
using LaurentD = LaurentSeries<RatFunc>;

/// sum_{k < trunc} c^k eps^k / k!
template <class F>
LaurentSeries<F> exp_linear(const F& c, int trunc) {
    if (trunc < 1) throw DomainError("exp_linear needs trunc >= 1");
    LaurentSeries<F> r = LaurentSeries<F>::zero(trunc);
    F term(1);
    for (int k = 0; k < trunc; ++k) {
        if (k > 0) term = term * c / F(k);
        if (term.is_zero()) break;
        r.set(k, term);
    }
    return r;
}

/// Lifts a rational-coefficient series into another field.
template <class F>
LaurentSeries<F> lift(const Laurent& s) {
    LaurentSeries<F> r = LaurentSeries<F>::zero(s.trunc());
    for (const auto& [e, v] : s.terms()) r.set(e, F(v));
    return r;
}

} // namespace mzv
