#pragma once

#include <compare>
#include <map>

#include "sqas/graded.hpp"
#include "sqas/weyl.hpp"

namespace sqas {

// Term hbar^{hbar} x^{mono} of the ring of formal series; total degree 2*hbar + |mono|.
struct SeriesKey {
  int hbar = 0;
  Tuple mono;
  auto operator<=>(const SeriesKey&) const = default;
  bool operator==(const SeriesKey&) const = default;
  int degree() const { return 2 * hbar + static_cast<int>(mono.size()); }
};

class Series {
 public:
  const std::map<SeriesKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Series& add(const SeriesKey& k, const Scalar& c);
  // Adds c hbar^h times the product of xs in written order.
  Series& add(const Scalar& c, int hbar, Tuple xs, const OddMask& odd);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Scalar& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  Scalar coeff(const SeriesKey& k) const;
  Scalar coeff(int hbar, const Tuple& mono) const { return coeff(SeriesKey{hbar, mono}); }

  Series truncated(int max_degree) const;
  // Multiplies every term by hbar^k.
  Series shifted(int k) const;

  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

 private:
  std::map<SeriesKey, Scalar> terms_;
};

Series multiply(const Series& a, const Series& b, const OddMask& odd, int max_degree);
// Requires every term of x to have degree >= 1.
Series exp_series(const Series& x, const OddMask& odd, int max_degree);
// Requires z = 1 + (terms of degree >= 1).
Series log_series(const Series& z, const OddMask& odd, int max_degree);
// Inverse of 1 + (terms of degree >= 1).
Series inverse_series(const Series& z, const OddMask& odd, int max_degree);
// Left derivative d/dx^a.
Series derivative(const Series& s, int a, const OddMask& odd);
Series apply(const Operator& op, const Series& s, const OddMask& odd, int max_degree);

}  // namespace sqas
