#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace heisorb {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// Element a + b*z of Q(z), z a primitive cube root of unity (z^2 = -1 - z).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(const Rational& a) : a_(a) {}
    Scalar(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static Scalar zeta() { return Scalar(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar conj() const;
    Rational norm() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    Scalar operator-() const { return Scalar(-a_, -b_); }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string str() const;
    // Accepts forms like "3/7", "-z", "1 + 2*z", "(1/2)*z - 3".
    static Scalar parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace heisorb
