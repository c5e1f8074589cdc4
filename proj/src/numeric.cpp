#include "mzv/numeric.hpp"

#include <algorithm>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/words.hpp"

namespace mzv {

namespace {

// Absolute rounding allowance per accumulated term at 50 significant digits.
const Real kRoundingPerTerm("1e-45");

Real ipow(const Real& x, int e) {
    Real r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

struct Partial {
    Real value;
    Real tail;  // bound on the omitted part
};

/// Li_u(1/2) = sum_{n_1 > ... > n_l >= 1} 2^{-n_1} / prod n_i^{u_i}, cut at n_1 <= N.
///
/// Tail: the inner sum over n_2 > ... > n_l is at most H_{n-1}^{l-1} <= (1 + ln n)^{l-1},
/// so the n-th outer term is at most t_n = 2^{-n} (1 + ln n)^{l-1} / n^{u_1}, and
/// t_{n+1}/t_n <= rho = (1 + 1/(N+1))^{l-1} / 2 for n > N.
Partial polylog_half(const std::vector<int>& u, long N) {
    const std::size_t l = u.size();
    if (l == 0) return {Real(1), Real(0)};
    std::vector<Real> cur(N + 1, Real(0));
    for (long n = 1; n <= N; ++n) cur[n] = 1 / ipow(Real(n), u[l - 1]);
    for (std::size_t i = l - 1; i-- > 0;) {
        Real strict = 0;
        for (long n = 1; n <= N; ++n) {
            const Real below = strict;
            strict += cur[n];
            cur[n] = below / ipow(Real(n), u[i]);
        }
    }
    Real sum = 0, w = 1;
    for (long n = 1; n <= N; ++n) {
        w /= 2;
        sum += w * cur[n];
    }
    const Real n1 = Real(N + 1);
    const Real first = pow(Real(2), -n1) * ipow(1 + log(n1), static_cast<int>(l) - 1) / ipow(n1, u[0]);
    const Real rho = ipow(1 + 1 / n1, static_cast<int>(l) - 1) / 2;
    if (rho >= 1) return {sum, Real(1e30)};
    return {sum, first / (1 - rho) + kRoundingPerTerm * N * l};
}

std::vector<int> as_composition(const Word& x) { return x.empty() ? std::vector<int>{} : composition_of(x_to_z(x)); }

Word revswap(Word w) {
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l.s = 1 - l.s;
    return w;
}

/// zeta(s) at cutoff N, through the path 0 -> 1/2 -> 1 in the iterated integral.
NumericValue mzv_at_cutoff(const std::vector<int>& s, long N) {
    const Word x = z_to_x(z_word(s));
    NumericValue total;
    for (std::size_t j = 0; j <= x.size(); ++j) {
        const Word upper = revswap(Word(x.begin(), x.begin() + j));
        const Word lower(x.begin() + j, x.end());
        const Partial a = polylog_half(as_composition(upper), N);
        const Partial b = polylog_half(as_composition(lower), N);
        total = total + NumericValue{a.value, a.tail, N} * NumericValue{b.value, b.tail, N};
    }
    total.terms_used = N;
    return total;
}

void require_admissible(const std::vector<int>& s) {
    if (!is_admissible(s)) throw DomainError("numeric evaluation needs s_1 >= 2 and s_i >= 1");
}

template <class Eval>
NumericValue until_target(Eval&& eval, long start, const NumericOptions& opts, const char* what) {
    const Real target(opts.target_error);
    long N = start;
    NumericValue v = eval(N);
    while (v.error_bound > target) {
        if (N >= opts.n_max)
            throw PrecisionUnreachable(std::string(what) + ": error target not reached at the cutoff limit (bound " +
                                           v.bound_str() + ")",
                                       static_cast<double>(v.error_bound));
        N = std::min(opts.n_max, 2 * N);
        v = eval(N);
    }
    return v;
}

/// Calls f on every composition obtained by merging runs of adjacent entries.
template <class F>
void for_each_coarsening(const std::vector<int>& s, F&& f) {
    const std::size_t gaps = s.empty() ? 0 : s.size() - 1;
    for (unsigned long mask = 0; mask < (1ul << gaps); ++mask) {
        std::vector<int> t{s[0]};
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (mask & (1ul << (i - 1))) t.back() += s[i];
            else t.push_back(s[i]);
        }
        f(t);
    }
}

/// Nested q-sum cut at n_1 <= N. Every summand is at most q^{n_1} (since [n] >= 1 and
/// s_1 >= 2) and there are at most n_1^{k-1} inner tuples, strict or not.
NumericValue qmzv_at_cutoff(const std::vector<int>& s, const Real& q, long N, bool strict) {
    const std::size_t k = s.size();
    std::vector<Real> qn(N + 1), br(N + 1);
    Real p = 1;
    for (long n = 1; n <= N; ++n) {
        p *= q;
        qn[n] = p;
        br[n] = (1 - p) / (1 - q);
    }
    auto factor = [&](long n, int e) { return ipow(qn[n], e - 1) / ipow(br[n], e); };
    std::vector<Real> cur(N + 1);
    for (long n = 1; n <= N; ++n) cur[n] = factor(n, s[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        Real acc = 0;
        for (long n = 1; n <= N; ++n) {
            const Real below = acc;
            acc += cur[n];
            cur[n] = (strict ? below : acc) * factor(n, s[i]);
        }
    }
    Real sum = 0;
    for (long n = 1; n <= N; ++n) sum += cur[n];
    const Real n1 = Real(N + 1);
    const int km1 = static_cast<int>(k) - 1;
    const Real rho = q * ipow(1 + 1 / n1, km1);
    Real bound = rho >= 1 ? Real(1e30) : pow(q, n1) * ipow(n1, km1) / (1 - rho);
    return {sum, bound + kRoundingPerTerm * N * k, N};
}

NumericValue qmzv_impl(const std::vector<int>& s, const Rational& q, const NumericOptions& opts, bool strict) {
    require_admissible(s);
    if (q.sign() <= 0 || q >= Rational(1)) throw DomainError("q must lie strictly between 0 and 1");
    const Real qr = to_real(q);
    return until_target([&](long N) { return qmzv_at_cutoff(s, qr, N, strict); }, 16, opts,
                        strict ? "qmzv" : "qmzv_star");
}

} // namespace

Real to_real(const Rational& r) { return Real(r.num().get_str()) / Real(r.den().get_str()); }

Real q_bracket(long n, const Real& q) { return (1 - pow(q, n)) / (1 - q); }

std::string NumericValue::value_str(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << value;
    return os.str();
}

std::string NumericValue::bound_str() const {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << error_bound;
    return os.str();
}

NumericValue NumericValue::scaled(const Real& k) const { return {value * k, error_bound * abs(k), terms_used}; }

NumericValue operator+(const NumericValue& a, const NumericValue& b) {
    return {a.value + b.value, a.error_bound + b.error_bound, std::max(a.terms_used, b.terms_used)};
}

NumericValue operator-(const NumericValue& a, const NumericValue& b) { return a + b.scaled(-1); }

NumericValue operator*(const NumericValue& a, const NumericValue& b) {
    const Real e = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound + a.error_bound * b.error_bound;
    return {a.value * b.value, e, std::max(a.terms_used, b.terms_used)};
}

NumericValue mzv_eval(const std::vector<int>& s, const NumericOptions& opts) {
    require_admissible(s);
    const long start = std::max<long>(16, 2 * static_cast<long>(s.size()));
    return until_target([&](long N) { return mzv_at_cutoff(s, N); }, start, opts, "mzv");
}

NumericValue mzv_star_eval(const std::vector<int>& s, const NumericOptions& opts) {
    require_admissible(s);
    NumericOptions inner = opts;
    inner.target_error = opts.target_error / static_cast<double>(1ul << (s.size() - 1));
    NumericValue total;
    for_each_coarsening(s, [&](const std::vector<int>& t) { total = total + mzv_eval(t, inner); });
    return total;
}

NumericValue qmzv_eval(const std::vector<int>& s, const Rational& q, const NumericOptions& opts) {
    return qmzv_impl(s, q, opts, true);
}

NumericValue qmzv_star_eval(const std::vector<int>& s, const Rational& q, const NumericOptions& opts) {
    return qmzv_impl(s, q, opts, false);
}

std::string tail_model_description() {
    return "engineering tail model: classical values split the iterated integral at 1/2 and bound the "
           "omitted terms by 2^-n (1+ln n)^(k-1) / n^s1 summed geometrically; q-values bound the omitted "
           "terms by q^n n^(k-1) summed geometrically; 50-digit rounding is added per term";
}

} // namespace mzv
