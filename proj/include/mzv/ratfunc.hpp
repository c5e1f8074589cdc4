#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Dense univariate polynomial in the direction perturbation delta.
/// coeffs()[i] multiplies delta^i; no trailing zeros (zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly delta() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    /// Exponent of the lowest nonzero term (0 for the zero polynomial).
    int low_order() const;

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& k) const;
    Poly monic() const;

    /// Euclidean division; throws DivisionByZero on a zero divisor.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Monic gcd (gcd(0,0) = 0).
    static Poly gcd(Poly a, Poly b);

    friend bool operator==(const Poly&, const Poly&) = default;
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    std::string str(std::string_view var = "d") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Element of Q(delta): numerator/denominator with the denominator monic and
/// gcd(numerator, denominator) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc delta() { return RatFunc(Poly::delta()); }
    /// Parses linear/polynomial forms in `d`: "3/2", "d", "2+d", "1/2*d - 3".
    static RatFunc parse(std::string_view text);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Value of a constant element; throws DomainError otherwise.
    Rational constant() const;

    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    /// Sign of the element for small delta > 0 (0 for zero).
    int sign_near_zero() const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

    std::string str() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// f(0); a vanishing denominator raises PoleAtLimit with the pole order.
Rational ratfunc_limit0(const RatFunc& f);

} // namespace mzv
