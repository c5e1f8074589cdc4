#pragma once

#include <functional>
#include <map>
#include <string>

#include "mzv/laurent.hpp"
#include "mzv/words.hpp"

namespace mzv {

template <class F>
F field_from(const RatFunc& r);
template <>
inline Rational field_from<Rational>(const RatFunc& r) { return r.constant(); }
template <>
inline RatFunc field_from<RatFunc>(const RatFunc& r) { return r; }

/// Linear functional on words with values in Laurent series, memoized per word.
/// The empty word always maps to 1.
template <class F>
class Character {
public:
    using Series = LaurentSeries<F>;
    using Eval = std::function<Series(const Word&)>;

    explicit Character(Eval eval, Rational lambda = Rational(1))
        : eval_(std::move(eval)), lambda_(std::move(lambda)) {}

    const Series& operator()(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Series v = w.empty() ? Series(F(1)) : eval_(w);
        return memo_.emplace(w, std::move(v)).first->second;
    }

    /// Weight of the quasi-shuffle the character is expected to respect.
    const Rational& lambda() const noexcept { return lambda_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    Eval eval_;
    Rational lambda_;
    std::map<Word, Series> memo_;
};

/// Algebraic Birkhoff decomposition phi = phi_-^{*-1} * phi_+ for the
/// deconcatenation coproduct and minimal subtraction:
///   bar(w)    = phi(w) + sum_{w = w'w'', w', w'' nonempty} phi_-(w') phi(w'')
///   phi_-(w)  = -Pi(bar(w)),   phi_+(w) = (1 - Pi)(bar(w)).
template <class F>
class Birkhoff {
public:
    using Series = LaurentSeries<F>;

    explicit Birkhoff(Character<F>& phi) : phi_(phi) {}

    const Series& minus(const Word& w) {
        if (auto it = minus_.find(w); it != minus_.end()) return it->second;
        Series v = w.empty() ? Series(F(1)) : -guarded(w, [&] { return bar(w).pi_minus(); });
        return minus_.emplace(w, std::move(v)).first->second;
    }

    const Series& plus(const Word& w) {
        if (auto it = plus_.find(w); it != plus_.end()) return it->second;
        Series v = w.empty() ? Series(F(1)) : guarded(w, [&] { return bar(w).pi_plus(); });
        return plus_.emplace(w, std::move(v)).first->second;
    }

    Character<F>& character() noexcept { return phi_; }

private:
    Series bar(const Word& w) {
        Series acc = phi_(w);
        for (std::size_t j = 1; j < w.size(); ++j) {
            const Word pre(w.begin(), w.begin() + j), suf(w.begin() + j, w.end());
            acc += minus(pre) * phi_(suf);
        }
        return acc;
    }

    template <class G>
    Series guarded(const Word& w, G&& g) {
        try {
            return g();
        } catch (const PrecisionError& e) {
            throw PrecisionError(std::string("Birkhoff recursion at ") + render_word(w) + ": " + e.what());
        }
    }

    Character<F>& phi_;
    std::map<Word, Series> minus_;
    std::map<Word, Series> plus_;
};

template <class F>
Birkhoff<F> birkhoff(Character<F>& phi) {
    return Birkhoff<F>(phi);
}

template <class F>
using Functional = std::function<LaurentSeries<F>(const Word&)>;

/// (f * g)(w) = sum over deconcatenations f(w') g(w'').
template <class F>
LaurentSeries<F> convolve(const Functional<F>& f, const Functional<F>& g, const Word& w) {
    LaurentSeries<F> acc;
    for (const auto& [l, r] : deconcat(w)) acc += f(l) * g(r);
    return acc;
}

/// f(u *_lambda v) == f(u) f(v) at the common truncation.
template <class F>
bool check_multiplicativity(const Functional<F>& f, const Word& u, const Word& v, const Rational& lambda) {
    const WordSumQ prod = mixable_shuffle(WordSumQ(u), WordSumQ(v), lambda);
    LaurentSeries<F> lhs;
    for (const auto& [w, c] : prod.terms()) lhs += f(w).scaled(F(c));
    return equal_at_common_trunc(lhs, f(u) * f(v));
}

/// Both halves of the decomposition are multiplicative.
template <class F>
bool check_multiplicativity(Birkhoff<F>& pair, const Word& u, const Word& v) {
    const Rational lambda = pair.character().lambda();
    Functional<F> m = [&](const Word& w) { return pair.minus(w); };
    Functional<F> p = [&](const Word& w) { return pair.plus(w); };
    return check_multiplicativity(m, u, v, lambda) && check_multiplicativity(p, u, v, lambda);
}

struct DifferentialCheck {
    bool precondition = false;  // phi(d w) = d_eps phi(w)
    bool conclusion = false;    // phi_+(d w) = d_eps phi_+(w)
    explicit operator bool() const { return precondition && conclusion; }
};

template <class F>
DifferentialCheck check_differential(Birkhoff<F>& pair, const Word& w) {
    DifferentialCheck out;
    const WordSum<RatFunc> dw = word_d(w);
    auto apply = [&](const std::function<LaurentSeries<F>(const Word&)>& f) {
        LaurentSeries<F> acc;
        for (const auto& [v, c] : dw.terms()) acc += f(v).scaled(field_from<F>(c));
        return acc;
    };
    Character<F>& phi = pair.character();
    out.precondition = equal_at_common_trunc(apply([&](const Word& v) { return phi(v); }), phi(w).d_epsilon());
    out.conclusion =
        equal_at_common_trunc(apply([&](const Word& v) { return pair.plus(v); }), pair.plus(w).d_epsilon());
    return out;
}

} // namespace mzv
