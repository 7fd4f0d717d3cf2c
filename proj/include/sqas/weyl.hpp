#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sqas/graded.hpp"

namespace sqas {

// Normal-ordered monomial hbar^h x^{x} d^{d}: coordinates left of derivatives,
// both index lists sorted ascending.
struct OpKey {
  int hbar = 0;
  Tuple x;
  Tuple d;
  auto operator<=>(const OpKey&) const = default;
  bool operator==(const OpKey&) const = default;
};

// Element of the graded Weyl algebra with [d_a, x^b] = delta_a^b.
class Operator {
 public:
  const std::map<OpKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c hbar^h x^{xs[0]} x^{xs[1]}... d_{ds[0]} d_{ds[1]}... with both lists in written order.
  Operator& add(const Scalar& c, int hbar, Tuple xs, Tuple ds, const OddMask& odd);
  Operator& add_key(const OpKey& k, const Scalar& c);

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Scalar& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const Scalar& c) { return a *= c; }

  Scalar coeff(const OpKey& k) const;
  // Parts of definite parity.
  Operator even_part(const OddMask& odd) const;
  Operator odd_part(const OddMask& odd) const;

  friend bool operator==(const Operator& a, const Operator& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::map<OpKey, Scalar> terms_;
};

int key_parity(const OpKey& k, const OddMask& odd);

Operator multiply(const Operator& a, const Operator& b, const OddMask& odd);
// Graded commutator [a,b] = ab - (-1)^{|a||b|} ba, extended bilinearly.
Operator commutator(const Operator& a, const Operator& b, const OddMask& odd);

Operator constant_operator(const Scalar& c, int hbar = 0);

}  // namespace sqas
