#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"
#include "mzv/ratfunc.hpp"

namespace mzv {

/// A letter of one of four graded alphabets:
///   Z(s)      composition letter z_s, s >= 1, z_s z_t = z_{s+t}
///   X(bit)    binary letter x_0 / x_1, no letter product
///   ZR(s, r)  pair (s, r) with componentwise product
///   GEN(ids)  commutative monomial in generator ids, grade carried along
struct Letter {
    enum class Kind : std::uint8_t { Z, X, ZR, GEN };

    Kind kind = Kind::Z;
    int s = 0;
    RatFunc r;
    std::vector<int> gens;

    static Letter z(int s);
    static Letter x(int bit);
    static Letter zr(int s, const RatFunc& r);
    static Letter gen(int id, int grade = 1);

    int grade() const;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
};

/// Letter product; throws UnsupportedMerge for binary letters and
/// AlphabetMismatch for letters of different kinds.
Letter merge(const Letter& a, const Letter& b);

using Word = std::vector<Letter>;

int weight(const Word& w);
bool has_letter_product(Letter::Kind k);

Word z_word(const std::vector<int>& composition);
Word x_word(const std::vector<int>& bits);
std::vector<int> composition_of(const Word& w);

/// Finite linear combination of words, kept in a canonical sorted map.
template <class C>
class WordSum {
public:
    WordSum() = default;
    WordSum(const Word& w, const C& c = C(1)) { add(w, c); }

    static WordSum unit() { return WordSum(Word{}); }

    void add(const Word& w, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    void add(Word&& w, const C& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    const std::map<Word, C>& terms() const& noexcept { return t_; }
    std::map<Word, C> terms() && { return std::move(t_); }
    bool is_zero() const noexcept { return t_.empty(); }
    std::size_t size() const noexcept { return t_.size(); }
    C coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? C() : it->second;
    }

    WordSum& operator+=(const WordSum& o) {
        for (const auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    WordSum& operator-=(const WordSum& o) {
        for (const auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    WordSum scaled(const C& k) const {
        WordSum r;
        if (k.is_zero()) return r;
        for (const auto& [w, c] : t_) r.t_.emplace(w, c * k);
        return r;
    }
    /// Sum of all coefficients.
    C mass() const {
        C m;
        for (const auto& [w, c] : t_) m += c;
        return m;
    }

    friend bool operator==(const WordSum&, const WordSum&) = default;

private:
    std::map<Word, C> t_;
};

using WordSumQ = WordSum<Rational>;

/// Pairs of order-preserving injections phi: [k] -> [k+l-r], psi: [l] -> [k+l-r]
/// whose images jointly cover [k+l-r]; images are 1-based.
struct StufflePair {
    std::vector<int> phi;
    std::vector<int> psi;
    friend bool operator==(const StufflePair&, const StufflePair&) = default;
    friend auto operator<=>(const StufflePair&, const StufflePair&) = default;
};
std::vector<StufflePair> stuffle_pairs(int k, int l, int r);

namespace detail {

void check_alphabet(const Word& a, const Word& b, bool need_product);

template <class C>
void shuffle_into(const Word& a, const Word& b, const C& coeff, WordSum<C>& out) {
    if (a.empty() || b.empty()) {
        out.add(a.empty() ? b : a, coeff);
        return;
    }
    Word buf;
    buf.reserve(a.size() + b.size());
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
        if (i == a.size() || j == b.size()) {
            const std::size_t mark = buf.size();
            buf.insert(buf.end(), a.begin() + i, a.end());
            buf.insert(buf.end(), b.begin() + j, b.end());
            out.add(buf, coeff);
            buf.resize(mark);
            return;
        }
        buf.push_back(a[i]);
        go(i + 1, j);
        buf.back() = b[j];
        go(i, j + 1);
        buf.pop_back();
    };
    go(0, 0);
}

template <class C>
WordSum<C> prepend(const Letter& l, const WordSum<C>& s) {
    WordSum<C> r;
    for (const auto& [w, c] : s.terms()) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(l);
        nw.insert(nw.end(), w.begin(), w.end());
        r.add(std::move(nw), c);
    }
    return r;
}

/// a *_lambda b on single words via  a1a' * b1b' = a1(a' * b) + b1(a * b') + lambda [a1b1](a' * b').
template <class C>
WordSum<C> mixable_recursive(const Word& a, const Word& b, const C& lambda) {
    const std::size_t m = a.size(), n = b.size();
    // memo[i][j] = a[i:] * b[j:]
    std::vector<std::vector<WordSum<C>>> memo(m + 1, std::vector<WordSum<C>>(n + 1));
    for (std::size_t i = m + 1; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            if (i == m || j == n) {
                Word tail(a.begin() + i, a.end());
                tail.insert(tail.end(), b.begin() + j, b.end());
                memo[i][j] = WordSum<C>(tail);
                continue;
            }
            WordSum<C> v = prepend(a[i], memo[i + 1][j]);
            v += prepend(b[j], memo[i][j + 1]);
            if (!lambda.is_zero()) v += prepend(merge(a[i], b[j]), memo[i + 1][j + 1]).scaled(lambda);
            memo[i][j] = std::move(v);
        }
    }
    return memo[0][0];
}

/// Same product as a sum over stuffle pairs, lambda^r for r merged positions.
template <class C>
WordSum<C> mixable_enumerative(const Word& a, const Word& b, const C& lambda) {
    if (a.empty() || b.empty()) return WordSum<C>(a.empty() ? b : a);
    const int k = static_cast<int>(a.size()), l = static_cast<int>(b.size());
    WordSum<C> out;
    C lp(1);
    for (int r = 0; r <= std::min(k, l); ++r) {
        if (r > 0) {
            lp *= lambda;
            if (lp.is_zero()) break;
        }
        for (const auto& p : stuffle_pairs(k, l, r)) {
            std::vector<const Letter*> from_a(k + l - r, nullptr), from_b(k + l - r, nullptr);
            for (int i = 0; i < k; ++i) from_a[p.phi[i] - 1] = &a[i];
            for (int j = 0; j < l; ++j) from_b[p.psi[j] - 1] = &b[j];
            Word w;
            w.reserve(k + l - r);
            for (int pos = 0; pos < k + l - r; ++pos) {
                if (from_a[pos] && from_b[pos]) w.push_back(merge(*from_a[pos], *from_b[pos]));
                else w.push_back(from_a[pos] ? *from_a[pos] : *from_b[pos]);
            }
            out.add(std::move(w), lp);
        }
    }
    return out;
}

} // namespace detail

template <class C>
WordSum<C> shuffle(const WordSum<C>& u, const WordSum<C>& v) {
    WordSum<C> out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            detail::check_alphabet(a, b, false);
            detail::shuffle_into(a, b, ca * cb, out);
        }
    return out;
}

enum class MixMethod { Recursive, Enumerative };

template <class C>
WordSum<C> mixable_shuffle(const WordSum<C>& u, const WordSum<C>& v, const C& lambda,
                           MixMethod method = MixMethod::Recursive) {
    WordSum<C> out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            detail::check_alphabet(a, b, !lambda.is_zero());
            WordSum<C> p = method == MixMethod::Recursive ? detail::mixable_recursive(a, b, lambda)
                                                          : detail::mixable_enumerative(a, b, lambda);
            out += p.scaled(ca * cb);
        }
    return out;
}

/// Quasi-shuffle (stuffle): mixable shuffle of weight 1.
template <class C>
WordSum<C> stuffle(const WordSum<C>& u, const WordSum<C>& v) {
    return mixable_shuffle(u, v, C(1));
}

/// Elements of the tensor square, used for Hopf compatibility checks.
template <class C>
class TensorSum {
public:
    using Key = std::pair<Word, Word>;
    void add(const Word& l, const Word& r, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(Key{l, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    const std::map<Key, C>& terms() const noexcept { return t_; }
    TensorSum& operator+=(const TensorSum& o) {
        for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
        return *this;
    }
    friend bool operator==(const TensorSum&, const TensorSum&) = default;

private:
    std::map<Key, C> t_;
};

/// Deconcatenation: all (prefix, suffix) splittings including the trivial ones.
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

template <class C>
TensorSum<C> coproduct(const WordSum<C>& u) {
    TensorSum<C> out;
    for (const auto& [w, c] : u.terms())
        for (const auto& [l, r] : deconcat(w)) out.add(l, r, c);
    return out;
}

template <class C>
C counit(const WordSum<C>& u) {
    return u.coeff(Word{});
}

/// Componentwise mixable shuffle on the tensor square.
template <class C>
TensorSum<C> tensor_mixable(const TensorSum<C>& x, const TensorSum<C>& y, const C& lambda) {
    TensorSum<C> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            WordSum<C> left = mixable_shuffle(WordSum<C>(kx.first), WordSum<C>(ky.first), lambda);
            WordSum<C> right = mixable_shuffle(WordSum<C>(kx.second), WordSum<C>(ky.second), lambda);
            const C c = cx * cy;
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms()) out.add(wl, wr, c * cl * cr);
        }
    return out;
}

namespace detail {
/// Calls f(parts) for every composition (i_1, ..., i_k) of n.
void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& f);
Letter merge_run(const Word& w, std::size_t from, std::size_t len);
} // namespace detail

/// Hoffman exponential: a_1...a_n -> sum over compositions I of n of
/// I[a]/(i_1!...i_k!), where I[a] merges consecutive blocks.
template <class C>
WordSum<C> hoffman_exp(const WordSum<C>& u) {
    WordSum<C> out;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) {
            out.add(w, c);
            continue;
        }
        if (!has_letter_product(w.front().kind)) throw UnsupportedMerge("Hoffman exp needs a letter product");
        detail::for_each_composition(static_cast<int>(w.size()), [&](const std::vector<int>& parts) {
            Word nw;
            Rational k(1);
            std::size_t pos = 0;
            for (int p : parts) {
                nw.push_back(detail::merge_run(w, pos, p));
                k /= Rational(factorial(p));
                pos += p;
            }
            out.add(std::move(nw), c * C(k));
        });
    }
    return out;
}

/// Inverse of hoffman_exp: coefficients (-1)^{n-k}/(i_1...i_k).
template <class C>
WordSum<C> hoffman_log(const WordSum<C>& u) {
    WordSum<C> out;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) {
            out.add(w, c);
            continue;
        }
        if (!has_letter_product(w.front().kind)) throw UnsupportedMerge("Hoffman log needs a letter product");
        const int n = static_cast<int>(w.size());
        detail::for_each_composition(n, [&](const std::vector<int>& parts) {
            Word nw;
            Rational k((n - static_cast<int>(parts.size())) % 2 ? -1 : 1);
            std::size_t pos = 0;
            for (int p : parts) {
                nw.push_back(detail::merge_run(w, pos, p));
                k /= Rational(p);
                pos += p;
            }
            out.add(std::move(nw), c * C(k));
        });
    }
    return out;
}

/// x_0^{s_1-1} x_1 ... x_0^{s_k-1} x_1  ->  z_{s_1} ... z_{s_k}
Word x_to_z(const Word& w);
Word z_to_x(const Word& w);

template <class C>
WordSum<C> x_to_z(const WordSum<C>& u) {
    WordSum<C> r;
    for (const auto& [w, c] : u.terms()) r.add(x_to_z(w), c);
    return r;
}
template <class C>
WordSum<C> z_to_x(const WordSum<C>& u) {
    WordSum<C> r;
    for (const auto& [w, c] : u.terms()) r.add(z_to_x(w), c);
    return r;
}

/// Shuffle of composition words computed on the binary side.
template <class C>
WordSum<C> transported_shuffle(const WordSum<C>& u, const WordSum<C>& v) {
    return x_to_z(shuffle(z_to_x(u), z_to_x(v)));
}

/// Duality involution on admissible compositions (s_1 >= 2).
std::vector<int> tau_dual(const std::vector<int>& s);
bool is_admissible(const std::vector<int>& s);

/// Derivation d<s, r> = r <s-1, r>, extended by the Leibniz rule.
WordSum<RatFunc> word_d(const Word& w);
WordSum<RatFunc> word_d(const WordSum<RatFunc>& u);

// ---- text forms -------------------------------------------------------------

/// "2,1,1" -> z2 z1 z1
Word parse_z_word(std::string_view text);
/// "0011" -> x0 x0 x1 x1
Word parse_x_word(std::string_view text);
/// "(-2|3/2)(-1|1/2)" -> <-2, 3/2><-1, 1/2>  (r may be a polynomial in d)
Word parse_zr_word(std::string_view text);

std::string render_word(const Word& w);
std::string render_coeff(const Rational& c);
std::string render_coeff(const RatFunc& c);

/// Canonical rendering: terms sorted by coefficient, then by word.
template <class C>
std::string render(const WordSum<C>& u) {
    if (u.is_zero()) return "0";
    std::vector<std::pair<C, const Word*>> items;
    for (const auto& [w, c] : u.terms()) items.emplace_back(c, &w);
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return *x.second < *y.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [c, w] : items) {
        std::string cs = render_coeff(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        const std::string ws = render_word(*w);
        if (cs == "1") out += ws;
        else if (w->empty()) out += cs;
        else out += cs + "·" + ws;
    }
    return out;
}

} // namespace mzv
