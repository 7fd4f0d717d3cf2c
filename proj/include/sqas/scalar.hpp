#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace sqas {

using Rational = mpq_class;

// Element a + b*sqrt(3) of Q(sqrt(3)). Rational values have b == 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(const Rational& a) : a_(a) {}
  Scalar(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static Scalar fraction(long p, long q);
  static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }
  // Parses "p", "p/q" or "p/q+r/s*sqrt3" style text produced by to_string.
  static Scalar parse(const std::string& text);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(int n);

}  // namespace sqas
