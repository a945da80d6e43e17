#ifndef FOLRIG_EXACTNUM_QUADRATIC_HPP
#define FOLRIG_EXACTNUM_QUADRATIC_HPP

#include <ostream>
#include <string>

#include "folrig/exactnum/rational.hpp"

namespace folrig::exactnum {

// Numbers of the form a + b*sqrt(2) with rational a, b.  When a and b are
// integers these form the ring Z[sqrt2], which is the full ring of integers
// of Q(sqrt2).  The nontrivial field automorphism sends sqrt2 to -sqrt2.
class QuadElement {
public:
    QuadElement() = default;
    QuadElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadElement(long a) : a_(a) {}
    QuadElement(long a, long b) : a_(a), b_(b) {}

    static QuadElement zero() { return {}; }
    static QuadElement one() { return QuadElement(1); }
    static QuadElement sqrt2() { return QuadElement(0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    // Membership in Z[sqrt2].
    bool is_integral() const { return a_.is_integer() && b_.is_integer(); }

    // Galois conjugate sigma2: a + b*sqrt2 -> a - b*sqrt2 (involutive ring map).
    QuadElement conjugate() const { return QuadElement(a_, -b_); }

    // Field norm N(x) = x * sigma2(x) = a^2 - 2 b^2; rational, multiplicative.
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    QuadElement operator-() const { return QuadElement(-a_, -b_); }

    QuadElement& operator+=(const QuadElement& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadElement& operator-=(const QuadElement& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadElement& operator*=(const QuadElement& o) {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r with r^2 = 2.
        Rational na = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadElement& operator/=(const QuadElement& o) {
        if (o.is_zero()) throw ValidationError("division by zero in Q(sqrt2)");
        // x/y = x * conj(y) / N(y); the norm is nonzero for nonzero y
        // because sqrt2 is irrational.
        Rational n = o.norm();
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
    friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
    friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
    friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }

    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

    // Exact sign of the real number a + b*sqrt2 (identity embedding).
    // When the terms disagree in sign the answer comes from comparing
    // a^2 with 2 b^2, never from floating point.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = a_ * a_, rhs = Rational(2) * b_ * b_;
        if (lhs == rhs) return 0;  // unreachable for nonzero rationals, kept for safety
        return (lhs > rhs) ? sa : sb;
    }

    std::string to_string() const { return "[" + a_.to_string() + ", " + b_.to_string() + "]"; }

    friend std::ostream& operator<<(std::ostream& os, const QuadElement& x) {
        return os << x.to_string();
    }

private:
    Rational a_, b_;
};

inline QuadElement galois_conjugate(const QuadElement& x) { return x.conjugate(); }

}  // namespace folrig::exactnum

#endif
