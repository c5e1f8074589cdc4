#include "mzv/rational.hpp"

#include <cctype>
#include <ostream>

#include "mzv/errors.hpp"

namespace mzv {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](bool allow_sign) {
        skip_ws();
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", pos);
        std::string s(text.substr(start, pos - start));
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return mpz_class(s);
    };
    mpz_class n = read_int(true);
    mpz_class d = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        d = read_int(false);
        if (d == 0) throw DivisionByZero("zero denominator in \"" + std::string(text) + "\"");
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace mzv

std::size_t std::hash<mzv::Rational>::operator()(const mzv::Rational& q) const noexcept {
    std::size_t h = std::hash<std::string>{}(q.num().get_str(16));
    return h ^ (std::hash<std::string>{}(q.den().get_str(16)) * 1099511628211ull);
}
