#include "mzv/ratfunc.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

// ---- Poly -----------------------------------------------------------------

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& k) const {
    if (k.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inverse());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    r = a;
    if (a.degree() < b.degree()) {
        q = Poly();
        return;
    }
    std::vector<Rational> qc(a.degree() - b.degree() + 1);
    const Rational inv_lead = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const Rational f = r.lead() * inv_lead;
        qc[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c_[shift + i] -= f * b.c_[i];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// ---- RatFunc --------------------------------------------------------------

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = std::move(q);
            Poly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    const Rational lead = den_.lead();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::constant() const {
    if (!is_constant()) throw DomainError("expected a constant, got " + str());
    return num_.coeff(0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0) normalize();
        else if (num_.is_zero()) den_ = Poly(1);
        return *this;
    }
    if (o.den_.degree() == 0) {
        // denominators are monic, so den = 1 here
        num_ += o.num_ * den_;
        return *this;
    }
    if (den_.degree() == 0) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    // Henrici: only gcds of the shared denominator part are needed
    Poly g = Poly::gcd(den_, o.den_);
    if (g.degree() == 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly bq, dq, rem;
        Poly::divmod(den_, g, bq, rem);
        Poly::divmod(o.den_, g, dq, rem);
        num_ = num_ * dq + o.num_ * bq;
        den_ = bq * o.den_;
        if (num_.is_zero()) {
            den_ = Poly(1);
            return *this;
        }
        Poly g2 = Poly::gcd(num_, g);
        if (g2.degree() > 0) {
            Poly q;
            Poly::divmod(num_, g2, q, rem);
            num_ = std::move(q);
            Poly::divmod(den_, g2, q, rem);
            den_ = std::move(q);
        }
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        num_ = num_ * o.num_;
        return *this;
    }
    auto cancel = [](Poly& n, Poly& d) {
        if (n.degree() <= 0 || d.degree() <= 0) return;
        Poly g = Poly::gcd(n, d);
        if (g.degree() <= 0) return;
        Poly q, r;
        Poly::divmod(n, g, q, r);
        n = std::move(q);
        Poly::divmod(d, g, q, r);
        d = std::move(q);
    };
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    cancel(a, d);
    cancel(c, b);
    num_ = a * c;
    den_ = b * d;
    const Rational lead = den_.lead();
    if (!lead.is_one()) {
        num_ = num_.scaled(lead.inverse());
        den_ = den_.monic();
    }
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

int RatFunc::sign_near_zero() const {
    if (is_zero()) return 0;
    const int n = num_.coeff(num_.low_order()).sign();
    const int d = den_.coeff(den_.low_order()).sign();
    return n * d;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0) {
        if (num_.degree() <= 0) return num_.coeff(0).str();
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

RatFunc RatFunc::parse(std::string_view text) {
    // sum of signed terms: rational, rational*d, d, d^k, rational*d^k
    std::string s;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            origin.push_back(i);
        }
    }
    if (s.empty()) throw ParseError("empty expression", 0);
    Poly acc;
    std::size_t pos = 0;
    auto here = [&] { return pos < origin.size() ? origin[pos] : text.size(); };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-'", here());
        }
        Rational coeff(1);
        bool have_number = false;
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        if (pos > start) {
            coeff = Rational::parse(s.substr(start, pos - start));
            have_number = true;
        }
        int power = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_number) throw ParseError("dangling '*'", here());
            ++pos;
            if (pos >= s.size() || s[pos] != 'd') throw ParseError("expected 'd'", here());
        }
        if (pos < s.size() && s[pos] == 'd') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t e0 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == e0) throw ParseError("expected exponent", here());
                power = std::stoi(s.substr(e0, pos - e0));
            }
        } else if (!have_number) {
            throw ParseError("expected a term", here());
        }
        std::vector<Rational> mono(power + 1);
        mono[power] = coeff * Rational(sign);
        acc += Poly(std::move(mono));
    }
    return RatFunc(acc);
}

Rational ratfunc_limit0(const RatFunc& f) {
    const Rational d0 = f.den().coeff(0);
    if (!d0.is_zero()) return f.num().coeff(0) / d0;
    throw PoleAtLimit(f.den().low_order());
}

} // namespace mzv
