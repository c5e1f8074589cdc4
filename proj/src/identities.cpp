#include "mzv/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

namespace {

constexpr double kClassicalTol = 1e-6;
constexpr double kQTol = 1e-10;

std::string join(const std::vector<int>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

std::vector<int> rotate_from(const std::vector<int>& s, std::size_t i) {
    std::vector<int> t(s.begin() + i, s.end());
    t.insert(t.end(), s.begin(), s.begin() + i);
    return t;
}

Real binom(long n, long k) { return Real(binomial(n, k).get_str()); }

/// Memoized evaluations shared by the cases of one suite run.
class Evaluator {
public:
    Evaluator(double classical_target, double q_target) : classical_{classical_target}, q_{q_target} {}

    const NumericValue& z(const std::vector<int>& s) { return get(z_, s, [&] { return mzv_eval(s, classical_); }); }
    const NumericValue& zs(const std::vector<int>& s) {
        return get(zs_, s, [&] { return mzv_star_eval(s, classical_); });
    }
    const NumericValue& zq(const std::vector<int>& s, const Rational& q) {
        return get(q_cache_[q.str()], s, [&] { return qmzv_eval(s, q, q_); });
    }
    const NumericValue& zqs(const std::vector<int>& s, const Rational& q) {
        return get(qs_cache_[q.str()], s, [&] { return qmzv_star_eval(s, q, q_); });
    }

private:
    using Cache = std::map<std::vector<int>, NumericValue>;
    template <class G>
    const NumericValue& get(Cache& c, const std::vector<int>& s, G&& g) {
        auto it = c.find(s);
        if (it == c.end()) it = c.emplace(s, g()).first;
        return it->second;
    }
    NumericOptions classical_, q_;
    Cache z_, zs_;
    std::map<std::string, Cache> q_cache_, qs_cache_;
};

class Runner {
public:
    Runner(const SuiteInfo& info, const SuiteParams& params)
        : eval_(info.tolerance > 0 ? info.tolerance * 1e-6 : 1e-12, info.tolerance > 0 ? info.tolerance * 1e-5 : 1e-15),
          params_(params) {
        result_.info = info;
    }

    int cap(int registered) const {
        return params_.max_weight ? std::min(registered, *params_.max_weight) : registered;
    }

    Evaluator& eval() { return eval_; }

    void numeric(const std::string& instance, const std::function<std::pair<NumericValue, NumericValue>()>& sides) {
        SuiteCase c;
        c.instance = instance;
        const double tol = result_.info.tolerance;
        try {
            const auto [lhs, rhs] = sides();
            c.lhs = lhs.value_str(18);
            c.rhs = rhs.value_str(18);
            c.discrepancy = static_cast<double>(abs(lhs.value - rhs.value));
            c.bound = static_cast<double>(lhs.error_bound + rhs.error_bound);
            result_.worst_bound = std::max(result_.worst_bound, c.bound);
            if (c.bound > tol / 10) {
                c.reason = "evaluator bound exceeds a tenth of the tolerance";
            } else if (c.discrepancy > tol) {
                c.reason = "discrepancy exceeds tolerance";
            } else {
                c.pass = true;
            }
        } catch (const Error& e) {
            c.reason = e.what();
        }
        result_.cases.push_back(std::move(c));
    }

    void symbolic(const std::string& instance, const WordSumQ& lhs, const WordSumQ& rhs) {
        SuiteCase c;
        c.instance = instance;
        c.lhs = render(lhs);
        c.rhs = render(rhs);
        const WordSumQ diff = lhs - rhs;
        c.discrepancy = static_cast<double>(diff.size());
        c.pass = diff.is_zero();
        if (!c.pass) c.reason = "differing terms: " + render(diff);
        result_.cases.push_back(std::move(c));
    }

    void check(const std::string& instance, bool ok, const std::string& lhs, const std::string& rhs,
               const std::string& reason = "") {
        SuiteCase c;
        c.instance = instance;
        c.lhs = lhs;
        c.rhs = rhs;
        c.pass = ok;
        c.discrepancy = ok ? 0 : 1;
        if (!ok) c.reason = reason;
        result_.cases.push_back(std::move(c));
    }

    SuiteResult take() { return std::move(result_); }

private:
    Evaluator eval_;
    SuiteParams params_;
    SuiteResult result_;
};

NumericValue constant(const Real& v) { return NumericValue{v, 0, 0}; }

// ---- classical suites -------------------------------------------------------

void sum_formula(Runner& R) {
    for (int n = 2; n <= R.cap(7); ++n) {
        for (int k = 1; k <= std::min(3, n - 1); ++k) {
            const std::string id = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            R.numeric(id, [&] {
                NumericValue lhs;
                for (const auto& s : admissible_compositions(n, k)) lhs = lhs + R.eval().z(s);
                return std::pair{lhs, R.eval().z({n})};
            });
            R.numeric("star " + id, [&] {
                NumericValue lhs;
                for (const auto& s : admissible_compositions(n, k)) lhs = lhs + R.eval().zs(s);
                return std::pair{lhs, R.eval().z({n}).scaled(binom(n - 1, k - 1))};
            });
        }
    }
}

void okuda_ueno(Runner& R) {
    for (int n = 2; n <= R.cap(6); ++n) {
        for (int r = 1; r < n; ++r) {
            R.numeric("n=" + std::to_string(n) + ",r=" + std::to_string(r), [&] {
                NumericValue lhs;
                for (int k = r; k <= n; ++k) {
                    NumericValue inner;
                    for (const auto& s : admissible_compositions(n, k)) inner = inner + R.eval().z(s);
                    lhs = lhs + inner.scaled(binom(k - 1, r - 1));
                }
                return std::pair{lhs, R.eval().z({n}).scaled(binom(n - 1, r))};
            });
        }
    }
}

std::vector<std::vector<int>> admissible_of_weight(int w) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k < w; ++k)
        for (auto& s : admissible_compositions(w, k)) out.push_back(std::move(s));
    return out;
}

void duality(Runner& R) {
    for (int w = 2; w <= R.cap(8); ++w) {
        for (const auto& s : admissible_of_weight(w)) {
            const std::vector<int> t = tau_dual(s);
            const bool involution = tau_dual(t) == s;
            const bool blocks = tau_blocks(s) == t;
            R.check("tau " + join(s), involution && blocks, join(t), join(tau_dual(t)),
                    !involution ? "tau is not an involution here" : "block form and word form of tau differ");
            R.numeric(join(s) + " vs " + join(t), [&] { return std::pair{R.eval().z(s), R.eval().z(t)}; });
        }
    }
}

void for_each_distribution(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(parts, 0);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == parts - 1) {
            c[i] = left;
            f(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[i] = v;
            go(i + 1, left - v);
        }
    };
    go(0, total);
}

NumericValue ohno_sum(Evaluator& E, const std::vector<int>& s, int l) {
    NumericValue acc;
    for_each_distribution(l, static_cast<int>(s.size()), [&](const std::vector<int>& c) {
        std::vector<int> t = s;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += c[i];
        acc = acc + E.z(t);
    });
    return acc;
}

void ohno(Runner& R) {
    const int cap = R.cap(8);
    for (int w = 2; w <= cap; ++w) {
        for (const auto& s : admissible_of_weight(w)) {
            for (int l = 0; w + l <= cap; ++l) {
                R.numeric(join(s) + ",l=" + std::to_string(l), [&] {
                    return std::pair{ohno_sum(R.eval(), s, l), ohno_sum(R.eval(), tau_dual(s), l)};
                });
            }
        }
    }
}

void cyclic_sum(Runner& R) {
    for (int n = 2; n <= R.cap(7); ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& s : compositions(n, k)) {
                if (std::none_of(s.begin(), s.end(), [](int v) { return v >= 2; })) continue;
                R.numeric(join(s), [&] {
                    NumericValue lhs, rhs;
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        std::vector<int> t = rotate_from(s, i);
                        t[0] += 1;
                        lhs = lhs + R.eval().z(t);
                        if (s[i] < 2) continue;
                        for (int j = 0; j <= s[i] - 2; ++j) {
                            std::vector<int> u = rotate_from(s, i);
                            u[0] = s[i] - j;
                            u.push_back(j + 1);
                            rhs = rhs + R.eval().z(u);
                        }
                    }
                    return std::pair{lhs, rhs};
                });
            }
        }
    }
}

/// sum_i sum_{j=0}^{s_i - 2} f(s_i - j, s_{i+1}, ..., s_{i-1}, j + 1)
template <class F>
NumericValue cyclic_star_side(const std::vector<int>& s, F&& f) {
    NumericValue acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (int j = 0; j <= s[i] - 2; ++j) {
            std::vector<int> u = rotate_from(s, i);
            u[0] = s[i] - j;
            u.push_back(j + 1);
            acc = acc + f(u);
        }
    }
    return acc;
}

void cyclic_sum_star(Runner& R) {
    for (int n = 2; n <= R.cap(7); ++n) {
        for (int k = 1; k < n; ++k) {
            for (const auto& s : admissible_compositions(n, k)) {
                R.numeric(join(s), [&] {
                    NumericValue lhs = cyclic_star_side(s, [&](const std::vector<int>& u) { return R.eval().zs(u); });
                    return std::pair{lhs, R.eval().z({n + 1}).scaled(n)};
                });
            }
        }
    }
}

void elo(Runner& R) {
    for (int n = 2; n <= R.cap(6); ++n) {
        for (int k = 1; k < n; ++k) {
            for (int p = 0; p <= 2; ++p) {
                const std::string id = "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",p=" + std::to_string(p);
                R.numeric(id, [&] {
                    NumericValue lhs, rhs;
                    for (auto s : admissible_compositions(n, k)) {
                        s.insert(s.end(), p, 1);
                        lhs = lhs + R.eval().z(s);
                    }
                    for (const auto& c : compositions(n + p, p + 1))
                        if (c[0] >= n - k + 1) rhs = rhs + R.eval().z(c);
                    return std::pair{lhs, rhs};
                });
            }
        }
    }
}

void weighted_euler(Runner& R) {
    for (int n = 3; n <= R.cap(8); ++n) {
        R.numeric("n=" + std::to_string(n), [&] {
            NumericValue lhs;
            for (int i = 2; i <= n - 1; ++i) lhs = lhs + R.eval().z({i, n - i}).scaled(pow(Real(2), i));
            return std::pair{lhs, R.eval().z({n}).scaled(n + 1)};
        });
        R.numeric("2^i - 1 form, n=" + std::to_string(n), [&] {
            NumericValue lhs;
            for (int i = 2; i <= n - 1; ++i) lhs = lhs + R.eval().z({i, n - i}).scaled(pow(Real(2), i) - 1);
            return std::pair{lhs, R.eval().z({n}).scaled(n)};
        });
    }
}

void weighted_sum_gx(Runner& R) {
    const int cap = R.cap(7);
    bool reduces = true;
    std::string first_bad;
    for (int n = 3; n <= cap; ++n) {
        for (const auto& s : admissible_compositions(n, 2)) {
            if (gx_weight(s) != Rational(2).pow(s[0]) - Rational(1)) {
                reduces = false;
                if (first_bad.empty()) first_bad = join(s);
            }
        }
    }
    R.check("k=2 weights reduce to 2^{s_1} - 1", reduces, "gx_weight(s_1, s_2)", "2^{s_1} - 1",
            "first mismatch at " + first_bad);
    for (int k = 2; k <= 3; ++k) {
        for (int n = k + 1; n <= cap; ++n) {
            R.numeric("n=" + std::to_string(n) + ",k=" + std::to_string(k), [&] {
                NumericValue lhs;
                for (const auto& s : admissible_compositions(n, k))
                    lhs = lhs + R.eval().z(s).scaled(to_real(gx_weight(s)));
                return std::pair{lhs, R.eval().z({n}).scaled(n)};
            });
        }
    }
}

// ---- q suites ---------------------------------------------------------------

const std::vector<Rational>& q_values() {
    static const std::vector<Rational> qs{Rational(1, 2), Rational(3, 4)};
    return qs;
}

template <class F>
void for_q_instances(Runner& R, F&& f) {
    for (const Rational& q : q_values())
        for (int n = 2; n <= R.cap(6); ++n)
            for (int k = 1; k <= std::min(3, n - 1); ++k) f(q, n, k);
}

std::string q_id(const Rational& q, int n, int k) {
    return "q=" + q.str() + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
}

void q_sum(Runner& R) {
    for_q_instances(R, [&](const Rational& q, int n, int k) {
        R.numeric(q_id(q, n, k), [&] {
            NumericValue lhs;
            for (const auto& s : admissible_compositions(n, k)) lhs = lhs + R.eval().zq(s, q);
            return std::pair{lhs, R.eval().zq({n}, q)};
        });
    });
}

void q_cyclic(Runner& R) {
    for_q_instances(R, [&](const Rational& q, int n, int k) {
        const Real one_minus_q = 1 - to_real(q);
        for (const auto& s : admissible_compositions(n, k)) {
            R.numeric("q=" + q.str() + " " + join(s), [&] {
                NumericValue lhs = cyclic_star_side(s, [&](const std::vector<int>& u) { return R.eval().zqs(u, q); });
                NumericValue rhs;
                for (int l = 0; l <= k; ++l)
                    rhs = rhs + R.eval().zq({n - l + 1}, q).scaled((n - l) * binom(k, l) * pow(one_minus_q, l));
                return std::pair{lhs, rhs};
            });
        }
    });
}

/// sum_{I(n,k)} zeta*_q = C(n-1,k-1)/(n-1) sum_{l<k} m(k,l) (n-1-l) (1-q)^l zeta_q(n-l),
/// with m = 1 in the literal statement and m = C(k-1,l) in the binomial variant.
void q_star_sum_impl(Runner& R, bool with_binomial) {
    for_q_instances(R, [&](const Rational& q, int n, int k) {
        const Real one_minus_q = 1 - to_real(q);
        R.numeric(q_id(q, n, k), [&] {
            NumericValue lhs, inner;
            for (const auto& s : admissible_compositions(n, k)) lhs = lhs + R.eval().zqs(s, q);
            for (int l = 0; l <= k - 1; ++l) {
                const Real m = with_binomial ? binom(k - 1, l) : Real(1);
                inner = inner + R.eval().zq({n - l}, q).scaled(m * (n - 1 - l) * pow(one_minus_q, l));
            }
            return std::pair{lhs, inner.scaled(binom(n - 1, k - 1) / (n - 1))};
        });
    });
}

void q_star_sum(Runner& R) { q_star_sum_impl(R, false); }
void q_star_sum_binomial(Runner& R) { q_star_sum_impl(R, true); }

// ---- decomposition suites ---------------------------------------------------

void euler_decomp_symbolic(Runner& R) {
    const int cap = R.cap(12);
    for (int r = 2; r <= cap - 2; ++r) {
        for (int s = 2; r + s <= cap; ++s) {
            const WordSumQ brute = shuffle(WordSumQ(z_to_x(z_word({r}))), WordSumQ(z_to_x(z_word({s}))));
            R.symbolic("r=" + std::to_string(r) + ",s=" + std::to_string(s), brute, euler_decomposition_formula(r, s));
        }
    }
}

void gen_decomp_symbolic(Runner& R) {
    const int cap = R.cap(8);
    for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
            for (int a = k; a + l <= cap; ++a) {
                for (int b = l; a + b <= cap; ++b) {
                    for (const auto& r : compositions(a, k)) {
                        for (const auto& s : compositions(b, l)) {
                            R.symbolic(join(r) + " x " + join(s), brute_force_decomposition(r, s),
                                       generalized_decomposition(r, s));
                        }
                    }
                }
            }
        }
    }
}

void euler_decomp_numeric(Runner& R) {
    for (int r = 2; r <= R.cap(4); ++r) {
        for (int s = 2; s <= R.cap(4); ++s) {
            R.numeric("r=" + std::to_string(r) + ",s=" + std::to_string(s), [&] {
                NumericValue rhs;
                for (int k = 0; k <= s - 1; ++k) rhs = rhs + R.eval().z({r + k, s - k}).scaled(binom(r + k - 1, k));
                for (int k = 0; k <= r - 1; ++k) rhs = rhs + R.eval().z({s + k, r - k}).scaled(binom(s + k - 1, k));
                return std::pair{R.eval().z({r}) * R.eval().z({s}), rhs};
            });
        }
    }
}

NumericValue evaluate_word_sum(Evaluator& E, const WordSumQ& u) {
    NumericValue acc;
    for (const auto& [w, c] : u.terms()) acc = acc + E.z(composition_of(w)).scaled(to_real(c));
    return acc;
}

void eds_generation(Runner& R) {
    const int cap = R.cap(6);
    std::vector<std::vector<int>> words;
    for (int w = 2; w <= cap - 2; ++w)
        for (auto& s : admissible_of_weight(w)) words.push_back(std::move(s));
    auto relation_case = [&](const std::vector<int>& a, const std::vector<int>& b) {
        const WordSumQ u(z_word(a)), v(z_word(b));
        const WordSumQ rel = transported_shuffle(u, v) - stuffle(u, v);
        bool admissible_support = true;
        for (const auto& [w, c] : rel.terms()) admissible_support = admissible_support && is_admissible(composition_of(w));
        const std::string id = join(a) + " , " + join(b);
        if (!admissible_support) {
            R.check(id, false, render(rel), "0", "relation has non-admissible support after cancellation");
            return;
        }
        R.numeric(id, [&] { return std::pair{evaluate_word_sum(R.eval(), rel), constant(0)}; });
    };
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            int wt = 0;
            for (int v : words[i]) wt += v;
            for (int v : words[j]) wt += v;
            if (wt <= cap) relation_case(words[i], words[j]);
        }
    for (int w = 2; w <= cap - 1; ++w)
        for (const auto& s : admissible_of_weight(w)) relation_case({1}, s);
}

struct Entry {
    SuiteInfo info;
    std::function<void(Runner&)> run;
};

const std::vector<Entry>& entries() {
    using K = SuiteKind;
    static const std::vector<Entry> e{
        {{"sum_formula", "sum of zeta over I(n,k) equals zeta(n); star version equals C(n-1,k-1) zeta(n)",
          "2 <= n <= 7, k <= 3", K::Numeric, true, kClassicalTol},
         sum_formula},
        {{"okuda_ueno", "sum_{k=r}^n C(k-1,r-1) sum_{I(n,k)} zeta = C(n-1,r) zeta(n)", "2 <= n <= 6, 1 <= r < n",
          K::Numeric, true, kClassicalTol},
         okuda_ueno},
        {{"duality", "zeta(s) = zeta(tau(s)), tau an involution", "admissible s of weight <= 8", K::Numeric, true,
          kClassicalTol},
         duality},
        {{"ohno", "Z(s; l) = Z(tau(s); l) for the sums over all ways to add l to the entries",
          "admissible s, weight + l <= 8", K::Numeric, true, kClassicalTol},
         ohno},
        {{"cyclic_sum", "cyclic sum formula for strict values", "all s of weight <= 7 with an entry >= 2",
          K::Numeric, true, kClassicalTol},
         cyclic_sum},
        {{"cyclic_sum_star", "cyclic sum of non-strict values equals n zeta(n+1)", "s in I(n,k), n <= 7",
          K::Numeric, true, kClassicalTol},
         cyclic_sum_star},
        {{"elo", "sum zeta(s, {1}^p) over s_1 + ... + s_k = n equals the sum over c_1 >= n-k+1",
          "n <= 6, p <= 2", K::Numeric, true, kClassicalTol},
         elo},
        {{"weighted_euler", "sum 2^i zeta(i, n-i) = (n+1) zeta(n), and sum (2^i - 1) zeta(i, n-i) = n zeta(n)",
          "3 <= n <= 8", K::Numeric, true, kClassicalTol},
         weighted_euler},
        {{"weighted_sum_gx", "weighted sum over I(n,k) with weights built from prefix sums equals n zeta(n)",
          "2 <= k <= 3, n <= 7", K::Numeric, true, kClassicalTol},
         weighted_sum_gx},
        {{"q_sum", "sum of q-zeta over I(n,k) equals q-zeta(n)", "q in {1/2, 3/4}, n <= 6, k <= 3", K::Numeric,
          true, kQTol},
         q_sum},
        {{"q_cyclic", "q-deformed cyclic sum of non-strict q-values",
          "q in {1/2, 3/4}, s in I(n,k), n <= 6, k <= 3", K::Numeric, true, kQTol},
         q_cyclic},
        {{"q_star_sum", "sum of non-strict q-values over I(n,k)", "q in {1/2, 3/4}, n <= 6, k <= 3", K::Numeric,
          true, kQTol},
         q_star_sum},
        {{"q_star_sum_binomial",
          "non-strict q-sum with the factor C(k-1,l) in the l-th term; agrees with q_star_sum for k <= 2",
          "q in {1/2, 3/4}, n <= 6, k <= 3", K::Numeric, true, kQTol},
         q_star_sum_binomial},
        {{"euler_decomp_symbolic", "closed form of the shuffle x0^{r-1}x1 with x0^{s-1}x1",
          "2 <= r, s and r + s <= 12", K::Symbolic, true, 0},
         euler_decomp_symbolic},
        {{"gen_decomp_symbolic", "product coefficients from index pairs versus brute-force shuffle",
          "depths k, l <= 2, |r| + |s| <= 8", K::Symbolic, true, 0},
         gen_decomp_symbolic},
        {{"euler_decomp_numeric", "zeta(r) zeta(s) = sum C(r+k-1,k) zeta(r+k,s-k) + sum C(s+k-1,k) zeta(s+k,r-k)",
          "2 <= r, s <= 4", K::Numeric, true, kClassicalTol},
         euler_decomp_numeric},
        {{"eds_generation", "shuffle-minus-stuffle relations, including z1 ones, vanish numerically",
          "total weight <= 6", K::Numeric, true, kClassicalTol},
         eds_generation},
        {{"ohno_zagier", "generating function of sums with a prescribed number of entries >= 2",
          "not implemented (out of scope)", K::Numeric, false, kClassicalTol},
         nullptr},
    };
    return e;
}

} // namespace

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return !c.pass; }));
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << info.name << ": ";
    if (!info.implemented) {
        os << "not implemented";
        return os.str();
    }
    os << (cases.size() - failures()) << "/" << cases.size() << " cases passed";
    if (info.kind == SuiteKind::Numeric) {
        os.precision(2);
        os << std::scientific << " (tolerance " << info.tolerance << ", worst evaluator bound " << worst_bound << ")";
    } else {
        os << " (exact)";
    }
    return os.str();
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const SuiteInfo& suite_info(const std::string& name) {
    for (const auto& i : suite_registry())
        if (i.name == name) return i;
    throw DomainError("unknown suite: " + name);
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        Runner R(e.info, params);
        if (e.run) e.run(R);
        return R.take();
    }
    throw DomainError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(const SuiteParams& params) {
    std::vector<SuiteResult> out;
    for (const auto& e : entries()) out.push_back(run_suite(e.info.name, params));
    return out;
}

// ---- building blocks --------------------------------------------------------

std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1 || n < k) return out;
    std::vector<int> c(k);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == k - 1) {
            c[i] = left;
            out.push_back(c);
            return;
        }
        for (int v = 1; v <= left - (k - 1 - i); ++v) {
            c[i] = v;
            go(i + 1, left - v);
        }
    };
    go(0, n);
    return out;
}

std::vector<std::vector<int>> admissible_compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    for (auto& c : compositions(n, k))
        if (c[0] >= 2) out.push_back(std::move(c));
    return out;
}

std::vector<int> tau_blocks(const std::vector<int>& s) {
    if (!is_admissible(s)) throw DomainError("duality needs an admissible composition");
    std::vector<std::pair<int, int>> blocks;  // (a, b): entry 1+b followed by a-1 ones
    for (int v : s) {
        if (v >= 2) blocks.emplace_back(1, v - 1);
        else ++blocks.back().first;
    }
    std::vector<int> t;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        t.push_back(1 + it->first);
        t.insert(t.end(), it->second - 1, 1);
    }
    return t;
}

Rational gx_weight(const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());
    if (k < 2) throw DomainError("the weighted sum formula needs depth >= 2");
    std::vector<int> S(k + 1, 0);
    for (int i = 1; i <= k; ++i) S[i] = S[i - 1] + s[i - 1];
    const Rational two(2);
    Rational inner;
    for (int i = 2; i <= k - 1; ++i) inner += two.pow(S[i] - s[0] - (i - 1));
    inner += two.pow(S[k - 1] - s[0] - (k - 2));
    return two.pow(s[0] - 1) + (two.pow(s[0] - 1) - Rational(1)) * inner;
}

WordSumQ euler_decomposition_formula(int r, int s) {
    WordSumQ out;
    auto add = [&](int a, int b, const mpz_class& c) { out.add(z_to_x(z_word({a, b})), Rational(c)); };
    for (int k = 0; k <= s - 1; ++k) add(r + k, s - k, binomial(r + k - 1, k));
    for (int k = 0; k <= r - 1; ++k) add(s + k, r - k, binomial(s + k - 1, k));
    return out;
}

WordSumQ generalized_decomposition(const std::vector<int>& r, const std::vector<int>& s) {
    const int k = static_cast<int>(r.size()), l = static_cast<int>(s.size());
    int total = 0;
    for (int v : r) total += v;
    for (int v : s) total += v;
    const auto pairs = stuffle_pairs(k, l, 0);
    WordSumQ out;
    for (const auto& t : compositions(total, k + l)) {
        mpz_class coeff = 0;
        for (const auto& p : pairs) {
            // owner[i] = 0 for an r-letter, 1 for an s-letter at position i (1-based)
            std::vector<int> owner(k + l + 1), h(k + l + 1);
            for (int j = 0; j < k; ++j) owner[p.phi[j]] = 0, h[p.phi[j]] = r[j];
            for (int j = 0; j < l; ++j) owner[p.psi[j]] = 1, h[p.psi[j]] = s[j];
            mpz_class prod = 1;
            int T = 0, H = 0;
            for (int i = 1; i <= k + l && prod != 0; ++i) {
                T += t[i - 1];
                H += h[i];
                if (i == 1 || owner[i - 1] == owner[i]) prod *= binomial(t[i - 1] - 1, h[i] - 1);
                else prod *= binomial(t[i - 1] - 1, T - H);
            }
            coeff += prod;
        }
        if (coeff != 0) out.add(z_word(t), Rational(coeff));
    }
    return out;
}

WordSumQ brute_force_decomposition(const std::vector<int>& r, const std::vector<int>& s) {
    return x_to_z(shuffle(WordSumQ(z_to_x(z_word(r))), WordSumQ(z_to_x(z_word(s)))));
}

} // namespace mzv
