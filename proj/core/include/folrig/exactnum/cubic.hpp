#ifndef FOLRIG_EXACTNUM_CUBIC_HPP
#define FOLRIG_EXACTNUM_CUBIC_HPP

#include <ostream>
#include <string>
#include <utility>

#include "folrig/exactnum/rational.hpp"

namespace folrig::exactnum {

// Elements a + b*t + c*t^2 of Q(cbrt2), written in the power basis t = 2^(1/3),
// t^2 = 4^(1/3).  Multiplication reduces with t^3 = 2.  Integer coordinates
// give the ring of integers Z[cbrt2].
class CubicElement {
public:
    CubicElement() = default;
    CubicElement(Rational a, Rational b, Rational c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    CubicElement(long a) : a_(a) {}
    CubicElement(long a, long b, long c) : a_(a), b_(b), c_(c) {}

    static CubicElement zero() { return {}; }
    static CubicElement one() { return CubicElement(1); }
    static CubicElement cbrt2() { return CubicElement(0, 1, 0); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero() && c_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero(); }
    bool is_integral() const { return a_.is_integer() && b_.is_integer() && c_.is_integer(); }

    CubicElement operator-() const { return CubicElement(-a_, -b_, -c_); }

    CubicElement& operator+=(const CubicElement& o) {
        a_ += o.a_;
        b_ += o.b_;
        c_ += o.c_;
        return *this;
    }
    CubicElement& operator-=(const CubicElement& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        c_ -= o.c_;
        return *this;
    }
    CubicElement& operator*=(const CubicElement& o) {
        const Rational two(2);
        // (a1 + b1 t + c1 t^2)(a2 + b2 t + c2 t^2) mod (t^3 - 2)
        Rational na = a_ * o.a_ + two * (b_ * o.c_ + c_ * o.b_);
        Rational nb = a_ * o.b_ + b_ * o.a_ + two * c_ * o.c_;
        Rational nc = a_ * o.c_ + b_ * o.b_ + c_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        c_ = std::move(nc);
        return *this;
    }
    CubicElement& operator/=(const CubicElement& o) { return *this *= o.inverse(); }

    // Field norm N(x) = product of the three embedding images
    //                 = a^3 + 2 b^3 + 4 c^3 - 6 a b c; zero only at x = 0.
    Rational norm() const {
        const Rational two(2), four(4), six(6);
        return a_ * a_ * a_ + two * b_ * b_ * b_ + four * c_ * c_ * c_ - six * a_ * b_ * c_;
    }

    CubicElement inverse() const {
        if (is_zero()) throw ValidationError("division by zero in Q(cbrt2)");
        // 1/x = adj(x) / N(x) where adj is the cofactor row of the
        // multiplication-by-x matrix in the power basis:
        //   adj_a = a^2 - 2 b c, adj_b = 2 c^2 - a b, adj_c = b^2 - a c.
        const Rational two(2);
        Rational n = norm();
        Rational pa = (a_ * a_ - two * b_ * c_) / n;
        Rational pb = (two * c_ * c_ - a_ * b_) / n;
        Rational pc = (b_ * b_ - a_ * c_) / n;
        return CubicElement(std::move(pa), std::move(pb), std::move(pc));
    }

    friend CubicElement operator+(CubicElement x, const CubicElement& y) { return x += y; }
    friend CubicElement operator-(CubicElement x, const CubicElement& y) { return x -= y; }
    friend CubicElement operator*(CubicElement x, const CubicElement& y) { return x *= y; }
    friend CubicElement operator/(CubicElement x, const CubicElement& y) { return x /= y; }

    friend bool operator==(const CubicElement& x, const CubicElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const CubicElement& x, const CubicElement& y) { return !(x == y); }

    std::string to_string() const {
        return "[" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const CubicElement& x) {
        return os << x.to_string();
    }

private:
    Rational a_, b_, c_;
};

// Exact sign of the real number a + b*2^(1/3) + c*4^(1/3).  Bisects a rational
// interval around the real cube root and squeezes the value by interval
// arithmetic until zero is excluded; a nonzero element cannot vanish there
// (1, t, t^2 are linearly independent over Q), so this terminates.
inline int sign_at_real_root(const CubicElement& x) {
    if (x.is_zero()) return 0;
    const mpq_class& a = x.a().raw();
    const mpq_class& b = x.b().raw();
    const mpq_class& c = x.c().raw();
    mpq_class lo(5, 4), hi(4, 3);  // (5/4)^3 = 125/64 < 2 < 64/27 = (4/3)^3
    while (true) {
        // Endpoint images of each term over [lo, hi]; both powers of the
        // root are positive, so the bounds come straight from the signs.
        const mpq_class t2_lo = lo * lo, t2_hi = hi * hi;
        mpq_class val_lo = a, val_hi = a;
        val_lo += b * (sgn(b) >= 0 ? lo : hi);
        val_hi += b * (sgn(b) >= 0 ? hi : lo);
        val_lo += c * (sgn(c) >= 0 ? t2_lo : t2_hi);
        val_hi += c * (sgn(c) >= 0 ? t2_hi : t2_lo);
        if (sgn(val_lo) > 0) return 1;
        if (sgn(val_hi) < 0) return -1;
        mpq_class mid = (lo + hi) / 2;
        if (mid * mid * mid < 2)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
}

}  // namespace folrig::exactnum

#endif
