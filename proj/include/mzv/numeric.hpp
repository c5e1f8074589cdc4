#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mzv/rational.hpp"

namespace mzv {

using Real = boost::multiprecision::cpp_bin_float_50;

/// A numeric approximation together with an error bound that holds under the
/// documented tail model (see tail_model_description()).
struct NumericValue {
    Real value = 0;
    Real error_bound = 0;
    long terms_used = 0;

    /// Decimal rendering of the value with `digits` significant digits.
    std::string value_str(int digits = 20) const;
    std::string bound_str() const;

    NumericValue scaled(const Real& k) const;
    friend NumericValue operator+(const NumericValue& a, const NumericValue& b);
    friend NumericValue operator-(const NumericValue& a, const NumericValue& b);
    friend NumericValue operator*(const NumericValue& a, const NumericValue& b);
};

struct NumericOptions {
    double target_error = 1e-12;
    /// Largest admissible cutoff on the outermost summation index.
    long n_max = 10'000'000;
};

/// zeta(s_1, ..., s_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^{-s_i}, s admissible.
NumericValue mzv_eval(const std::vector<int>& s, const NumericOptions& opts = {});

/// Non-strict version, n_1 >= ... >= n_k >= 1.
NumericValue mzv_star_eval(const std::vector<int>& s, const NumericOptions& opts = {});

/// q-MZV sum_{n_1 > ... > n_k} prod q^{n_i (s_i - 1)} / [n_i]^{s_i}, 0 < q < 1.
NumericValue qmzv_eval(const std::vector<int>& s, const Rational& q, const NumericOptions& opts = {});
NumericValue qmzv_star_eval(const std::vector<int>& s, const Rational& q, const NumericOptions& opts = {});

/// [n] = (1 - q^n)/(1 - q).
Real q_bracket(long n, const Real& q);

Real to_real(const Rational& r);

/// One-line description of the error model, for reports.
std::string tail_model_description();

} // namespace mzv
