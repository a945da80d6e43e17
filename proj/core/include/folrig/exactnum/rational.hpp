#ifndef FOLRIG_EXACTNUM_RATIONAL_HPP
#define FOLRIG_EXACTNUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "folrig/errors.hpp"

namespace folrig::exactnum {

// Exact rational number backed by GMP. Kept canonical at all times:
// gcd(|num|, den) = 1 and den > 0, so equality is plain field comparison
// and serialization is stable.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    // Parses "p", "-p" or "p/q". Rejects zero denominators and stray text.
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p/q", or just "p" for integers — the on-disk coefficient syntax.
    std::string to_string() const { return v_.get_str(); }

    // Nearest-double conversion; exact values beyond double range saturate.
    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

namespace detail {
inline mpz_class parse_integer(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) throw ValidationError("empty integer literal '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw ValidationError("bad integer literal '" + text + "'");
    // mpz_set_str accepts a '-' sign but not '+'; strip the latter.
    return mpz_class(text[0] == '+' ? text.substr(1) : text, 10);
}
}  // namespace detail

inline Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpq_class(detail::parse_integer(text)));
    mpz_class num = detail::parse_integer(text.substr(0, slash));
    mpz_class den = detail::parse_integer(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational literal with zero denominator: '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

inline Rational::Rational(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    canonicalize();
}

inline Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace folrig::exactnum

#endif
