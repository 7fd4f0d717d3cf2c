#include "sqas/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sqas {

namespace {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      throw std::invalid_argument("malformed rational: " + text);
  }
  std::string t = text[0] == '+' ? text.substr(1) : text;
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::parse(const std::string& text) {
  const std::string tag = "*sqrt3";
  auto pos = text.find(tag);
  if (pos == std::string::npos) return Scalar(parse_rational(text));
  if (pos + tag.size() != text.size()) throw std::invalid_argument("malformed scalar: " + text);
  std::string head = text.substr(0, pos);
  // split head at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if (head[k] == '+' || head[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(Rational(0), parse_rational(head));
  return Scalar(parse_rational(head.substr(0, split)), parse_rational(head.substr(split)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(Rational(1) / a_);
  Rational n = a_ * a_ - 3 * b_ * b_;
  return Scalar(a_ / n, -b_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + 3 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_); }

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string s = sgn(a_) == 0 ? "" : a_.get_str();
  std::string r = b_.get_str();
  if (!s.empty() && sgn(b_) > 0) s += "+";
  return s + r + "*sqrt3";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Scalar(Rational(f));
}

}  // namespace sqas
