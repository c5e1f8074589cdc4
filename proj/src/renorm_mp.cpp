#include "mzv/renorm_mp.hpp"

#include "mzv/errors.hpp"

namespace mzv {

MpMethod parse_mp_method(const std::string& s) {
    if (s == "ev12") return MpMethod::Ev12;
    if (s == "ev21") return MpMethod::Ev21;
    if (s == "sym") return MpMethod::Sym;
    if (s == "birkhoff") return MpMethod::Birkhoff;
    throw DomainError("unknown method '" + s + "'");
}

ZetaConvention parse_convention(const std::string& s) {
    if (s == "riemann") return ZetaConvention::Riemann;
    if (s == "zero-inclusive") return ZetaConvention::ZeroInclusive;
    throw DomainError("unknown convention '" + s + "'");
}

namespace {

void check_args(int a1, int a2) {
    if (a1 < 0 || a2 < 0) throw DomainError("expected non-negative a1, a2");
}

// (1/(a2+1)) sum_j B_j C(a2+1, j) (zeta(-(a1+a2-j+1); v) - zeta(-a1; v))
Rational iterated_sum(int a1, int a2, const Rational& v, ZetaConvention conv) {
    const Rational base = zeta1_neg(a1, v, conv);
    Rational acc;
    for (int j = 0; j <= a2 + 1; ++j) {
        const Rational bj = bernoulli(j);
        if (bj.is_zero()) continue;
        acc += bj * Rational(binomial(a2 + 1, j)) * (zeta1_neg(a1 + a2 - j + 1, v, conv) - base);
    }
    return acc / Rational(a2 + 1);
}

Rational residue(int a1, int a2) {
    const int n = a1 + a2 + 2;
    Rational r = Rational(mpz_class(factorial(a1) * factorial(a2))) * bernoulli(n) / Rational(factorial(n));
    return (a1 + 1) % 2 ? -r : r;
}

} // namespace

Rational mp_ev12(int a1, int a2, const Rational& v, ZetaConvention conv) {
    check_args(a1, a2);
    return iterated_sum(a1, a2, v, conv);
}

Rational mp_ev21(int a1, int a2, const Rational& v, ZetaConvention conv) {
    check_args(a1, a2);
    return iterated_sum(a1, a2, v, conv) + residue(a1, a2);
}

Rational mp_sym(int a1, int a2, const Rational& v, ZetaConvention conv) {
    return (mp_ev12(a1, a2, v, conv) + mp_ev21(a1, a2, v, conv)) / Rational(2);
}

Rational mp_birkhoff(int a1, int a2, const Rational& v, ZetaConvention conv) {
    check_args(a1, a2);
    const Rational base = zeta1_neg(a1, v, conv);
    Rational acc;
    for (int j = 0; j <= a2 + 1; ++j) {
        const Rational bj = bernoulli(j);
        if (bj.is_zero()) continue;
        acc += bj * falling_factorial(Rational(a2), j - 1) / Rational(factorial(j)) *
               (zeta1_neg(a1 + a2 - j + 1, v, conv) - base);
    }
    return acc + residue(a1, a2) / Rational(2);
}

Rational mp_value(int a1, int a2, MpMethod method, const Rational& v, ZetaConvention conv) {
    switch (method) {
    case MpMethod::Ev12: return mp_ev12(a1, a2, v, conv);
    case MpMethod::Ev21: return mp_ev21(a1, a2, v, conv);
    case MpMethod::Sym: return mp_sym(a1, a2, v, conv);
    case MpMethod::Birkhoff: return mp_birkhoff(a1, a2, v, conv);
    }
    throw DomainError("unknown method");
}

std::vector<std::vector<Rational>> mp_table(int max, MpMethod method, const Rational& v, ZetaConvention conv) {
    std::vector<std::vector<Rational>> t(max + 1, std::vector<Rational>(max + 1));
    for (int b = 0; b <= max; ++b)
        for (int a = 0; a <= max; ++a) t[b][a] = mp_value(a, b, method, v, conv);
    return t;
}

SchemeComparison compare_tables(const std::vector<std::vector<Rational>>& gz,
                                const std::vector<std::vector<Rational>>& mp) {
    SchemeComparison out;
    const int n = static_cast<int>(std::min(gz.size(), mp.size()));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            CellComparison c{a, b, gz[b][a], mp[b][a]};
            const bool claimed = ((a + b) % 2 == 1 && b != 0) || a == b;
            if (c.gz == c.mp) {
                out.agree.push_back(c);
            } else {
                out.disagree.push_back(c);
                if (claimed) out.missing_claimed.push_back(c);
            }
        }
    return out;
}

} // namespace mzv
