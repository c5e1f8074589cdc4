#pragma once

#include <optional>
#include <vector>

#include "mzv/hopf.hpp"
#include "mzv/sum_engine.hpp"

namespace mzv {

/// Z(w; eps) for a word of (s, r) letters with s <= 0 and r > 0.
template <class F>
LaurentSeries<F> gz_character(const Word& w, int trunc) {
    std::vector<SumLetter<F>> letters;
    for (const auto& l : w) {
        if (l.kind != Letter::Kind::ZR) throw AlphabetMismatch("the heat-kernel character acts on (s, r) words");
        letters.push_back({l.s, field_from<F>(l.r)});
    }
    return nested_regularized_sum(letters, trunc);
}

/// Character wrapper around gz_character at a fixed truncation order.
template <class F>
Character<F> gz_char(int trunc) {
    return Character<F>([trunc](const Word& w) { return gz_character<F>(w, trunc); }, Rational(1));
}

/// 2 (weight + depth) + headroom
int gz_default_trunc(const std::vector<int>& s, int headroom = 8);

Word gz_word(const std::vector<int>& s, const std::vector<RatFunc>& r);

/// eps^0 coefficient of phi_+ on <s, r>.
template <class F>
F gz_renorm_directional(const std::vector<int>& s, const std::vector<RatFunc>& r, int trunc) {
    Character<F> phi = gz_char<F>(trunc);
    Birkhoff<F> pair(phi);
    return pair.plus(gz_word(s, r)).finite_part();
}

enum class DirectionMode { DeltaSymbolic, Exact };

struct GzOptions {
    DirectionMode mode = DirectionMode::DeltaSymbolic;
    std::optional<int> trunc;
};

/// Renormalized value at non-positive integers: directions |s_i| + delta, delta -> 0.
/// Exact mode uses r = -s and needs every s_i < 0. On a precision failure the
/// default truncation is retried once with doubled headroom.
Rational gz_renorm(const std::vector<int>& s, const GzOptions& opts = {});

/// table[b][a] = renormalized zeta(-a, -b), 0 <= a, b <= max.
std::vector<std::vector<Rational>> gz_table(int max, const GzOptions& opts = {});

} // namespace mzv
