#pragma once

#include <string>
#include <vector>

#include "mzv/exact_arith.hpp"

namespace mzv {

enum class MpMethod { Ev12, Ev21, Sym, Birkhoff };

MpMethod parse_mp_method(const std::string& s);
ZetaConvention parse_convention(const std::string& s);

/// Iterated regularized evaluation, inner variable first.
Rational mp_ev12(int a1, int a2, const Rational& v = Rational(0),
                 ZetaConvention conv = ZetaConvention::Riemann);
/// Opposite order; differs from mp_ev12 by a Bernoulli residue term.
Rational mp_ev21(int a1, int a2, const Rational& v = Rational(0),
                 ZetaConvention conv = ZetaConvention::Riemann);
Rational mp_sym(int a1, int a2, const Rational& v = Rational(0),
                ZetaConvention conv = ZetaConvention::Riemann);
/// Closed form of the Birkhoff-renormalized double value.
Rational mp_birkhoff(int a1, int a2, const Rational& v = Rational(0),
                     ZetaConvention conv = ZetaConvention::Riemann);

Rational mp_value(int a1, int a2, MpMethod method, const Rational& v = Rational(0),
                  ZetaConvention conv = ZetaConvention::Riemann);

/// table[b][a] = value at (-a, -b).
std::vector<std::vector<Rational>> mp_table(int max, MpMethod method = MpMethod::Birkhoff,
                                            const Rational& v = Rational(0),
                                            ZetaConvention conv = ZetaConvention::Riemann);

struct CellComparison {
    int a, b;
    Rational gz, mp;
};

struct SchemeComparison {
    std::vector<CellComparison> agree;
    std::vector<CellComparison> disagree;
    /// Cells with a+b odd and b != 0, or a = b, that are not in `agree`.
    std::vector<CellComparison> missing_claimed;
};

/// Compares two tables indexed [b][a].
SchemeComparison compare_tables(const std::vector<std::vector<Rational>>& gz,
                                const std::vector<std::vector<Rational>>& mp);

} // namespace mzv
