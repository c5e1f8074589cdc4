#include "mzv/renorm_gz.hpp"

namespace mzv {

int gz_default_trunc(const std::vector<int>& s, int headroom) {
    int w = 0;
    for (int v : s) w += v < 0 ? -v : v;
    return 2 * (w + static_cast<int>(s.size())) + headroom;
}

Word gz_word(const std::vector<int>& s, const std::vector<RatFunc>& r) {
    if (s.size() != r.size()) throw DomainError("arguments and directions differ in length");
    Word w;
    for (std::size_t i = 0; i < s.size(); ++i) w.push_back(Letter::zr(s[i], r[i]));
    return w;
}

namespace {

Rational gz_once(const std::vector<int>& s, DirectionMode mode, int trunc) {
    std::vector<RatFunc> r;
    for (int v : s) {
        if (v > 0) throw DomainError("renormalized values are implemented for non-positive arguments");
        if (mode == DirectionMode::Exact) {
            if (v == 0) throw DomainError("exact directions -s need strictly negative arguments");
            r.emplace_back(Rational(-v));
        } else {
            r.push_back(RatFunc(Rational(-v)) + RatFunc::delta());
        }
    }
    if (mode == DirectionMode::Exact) return gz_renorm_directional<Rational>(s, r, trunc);
    return ratfunc_limit0(gz_renorm_directional<RatFunc>(s, r, trunc));
}

} // namespace

Rational gz_renorm(const std::vector<int>& s, const GzOptions& opts) {
    if (s.empty()) return Rational(1);
    if (opts.trunc) return gz_once(s, opts.mode, *opts.trunc);
    try {
        return gz_once(s, opts.mode, gz_default_trunc(s));
    } catch (const PrecisionError&) {
        return gz_once(s, opts.mode, gz_default_trunc(s, 16));
    }
}

std::vector<std::vector<Rational>> gz_table(int max, const GzOptions& opts) {
    std::vector<std::vector<Rational>> t(max + 1, std::vector<Rational>(max + 1));
    for (int b = 0; b <= max; ++b)
        for (int a = 0; a <= max; ++a) t[b][a] = gz_renorm({-a, -b}, opts);
    return t;
}

} // namespace mzv
