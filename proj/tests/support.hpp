#pragma once

#include <string>

#include "doctest.h"
#include "mzv/laurent.hpp"

namespace doctest {
template <class F>
struct StringMaker<mzv::LaurentSeries<F>> {
    static String convert(const mzv::LaurentSeries<F>& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<mzv::Rational> {
    static String convert(const mzv::Rational& q) { return q.str().c_str(); }
};
template <>
struct StringMaker<mzv::RatFunc> {
    static String convert(const mzv::RatFunc& q) { return q.str().c_str(); }
};
} // namespace doctest
