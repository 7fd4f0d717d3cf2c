#pragma once

#include <map>
#include <stdexcept>

#include "sqas/series.hpp"
#include "sqas/structure.hpp"

namespace sqas::testing {

struct LZSolution {
  Series Z;
  // Every L_i Z vanished through total degree max_degree + 1.
  bool consistent = true;
};

// Solves L_i Z = 0 with Z(0) = 1 one total degree at a time. The degree one part of each L_i is
// hbar d_i, so hbar d_i Z_d = -(degree two part) Z_{d-1}; Z_d is integrated with the Euler operator
// and then substituted back into every equation.
inline LZSolution solve_partition(const std::map<int, Operator>& ops, const GradedBasis& basis, int max_degree) {
  if (basis.has_extra_fermion()) throw std::invalid_argument("solve_partition: every variable needs a constraint");
  const OddMask& odd = basis.odd_mask();
  LZSolution out;
  out.Z.add(SeriesKey{0, {}}, Scalar(1));
  auto part = [](const Series& s, int degree) {
    Series r;
    for (const auto& [k, v] : s.terms())
      if (k.degree() == degree) r.add(k, v);
    return r;
  };
  for (int d = 1; d <= max_degree; ++d) {
    std::map<int, Series> grad;  // d_a Z_d
    for (const auto& [i, L] : ops) {
      const Series lz = apply(L, out.Z, odd, d + 1);
      grad[i] = part(lz, d + 1).shifted(-1);
      grad[i] *= Scalar(-1);
    }
    Series euler;
    for (const auto& [a, g] : grad) {
      Series xa;
      xa.add(SeriesKey{0, {a}}, Scalar(1));
      euler += multiply(xa, g, odd, d);
    }
    Series Zd;
    for (const auto& [k, v] : euler.terms()) Zd.add(k, v / Scalar(static_cast<long>(k.mono.size())));
    out.Z += Zd;
    for (const auto& [i, L] : ops) {
      const Series lz = apply(L, out.Z, odd, d + 1);
      if (!part(lz, d + 1).is_zero()) out.consistent = false;
    }
  }
  return out;
}

inline LZSolution solve_partition(const SQASTensors& t, int max_degree) {
  std::map<int, Operator> ops;
  for (int i = 1; i <= t.basis.max_index(); ++i) ops[i] = to_operator(t, i);
  return solve_partition(ops, t.basis, max_degree);
}

}  // namespace sqas::testing
