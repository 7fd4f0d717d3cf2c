#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqas/recursion.hpp"
#include "sqas/series.hpp"
#include "sqas/structure.hpp"

namespace sqas {

// s = sum over ordered tuples (1/k) s^{a_1..a_k} y_{a_1}..y_{a_k}, stored once per canonical tuple.
struct GaugeData {
  std::map<Tuple, Scalar> terms;

  // Tuples sorted, length >= 2, even, no repeated odd index; throws std::invalid_argument.
  void validate(const GradedBasis& basis) const;
  int order() const;
  // D_s / hbar = sum_k (hbar^{k-1} / k) sum_T (k! / prod m!) s^T d^T.
  Operator generator(const GradedBasis& basis) const;
  GaugeData negated() const;
};

// exp(D_s/hbar) L_i exp(-D_s/hbar) for every label.
std::map<int, Operator> gauge_transform_operators(const SQASTensors& t, const GaugeData& s);
// Quadratic output only; order > 2 raises UnsupportedError listing the terms outside the quadratic form.
SQASTensors gauge_transform_structure(const SQASTensors& t, const GaugeData& s);
// N^{-1} exp(D_s/hbar) Z with N the x-independent part, through total degree max_degree.
Series gauge_transform_series(const Series& Z, const GaugeData& s, const GradedBasis& basis, int max_degree);
std::vector<SeriesCoefficient> gauge_transform_Z(FreeEnergyTable& table, const GaugeData& s, int max_degree);

// Polynomial in x^a (symbol 2a) and y_a (symbol 2a+1); keys are graded-sorted symbol tuples.
using ClassicalPoly = std::map<Tuple, Scalar>;

inline int x_symbol(int a) { return 2 * a; }
inline int y_symbol(int a) { return 2 * a + 1; }
OddMask symbol_mask(const GradedBasis& basis);

void poly_add(ClassicalPoly& p, Tuple symbols, const Scalar& c, const OddMask& smask);
ClassicalPoly poly_product(const ClassicalPoly& p, const ClassicalPoly& q, const OddMask& smask);
// Graded Poisson bracket with {y_a, x^b} = delta_a^b.
ClassicalPoly poisson_bracket(const ClassicalPoly& p, const ClassicalPoly& q, const GradedBasis& basis);
std::string poly_string(const ClassicalPoly& p, const std::vector<std::string>& names = {});

struct ClassicalStructure {
  GradedBasis basis;
  std::map<int, ClassicalPoly> hamiltonians;
  std::map<Tuple, Scalar> f;
  std::vector<std::string> names;
  // Variable of the source structure behind each variable here (identity unless reduced).
  std::vector<int> origin;

  // Linear part exactly y_i, degree <= 2, parity of label i; throws std::invalid_argument.
  void validate() const;
};

// L_i^cl = y_i - 1/2 A x x - B x y - 1/2 C y y.
ClassicalStructure classical_limit(const SQASTensors& t);
// {L_i, L_j} - f_{ij}^k L_k for all label pairs.
ConstraintReport check_poisson(const ClassicalStructure& cl);
// Substitutes y_a = d_a F_cl from the genus zero table; residuals through max_degree.
ConstraintReport check_lagrangian(const ClassicalStructure& cl, FreeEnergyTable& table, int max_degree);
// Genus zero part of the table as a series, through x-degree max_degree.
Series classical_free_energy(FreeEnergyTable& table, int max_degree);
// Even labels only, odd variables projected out and the rest renumbered.
ClassicalStructure bosonic_reduction(const ClassicalStructure& cl);

enum class Ordering { normal, weyl };

// Quantized hamiltonians without constant shifts.
std::map<int, Operator> quantize(const ClassicalStructure& cl, Ordering ordering);
SQASTensors weyl_quantize(const ClassicalStructure& cl);

struct CocycleResult {
  // zeta_{ij} = ([L_i, L_j] - hbar f_{ij}^k L_k) / hbar^2, nonzero entries only.
  std::map<std::pair<int, int>, Scalar> zeta;
  // False when some [L_i, L_j] - hbar f L_k is not a constant times hbar^2.
  bool constant = true;
  bool cocycle_condition = true;
  bool solvable = false;
  // Shifts L_i -> L_i + hbar D_i with f_{ij}^k D_k = zeta_{ij}, D_i = 0 on odd labels.
  std::map<int, Scalar> D;
  // Basis of the shifts D with f_{ij}^k D_k = 0.
  std::vector<std::map<int, Scalar>> ambiguity;
};

CocycleResult cocycle(const ClassicalStructure& cl, Ordering ordering = Ordering::normal);
// Quantization with the cocycle removed; throws UnsupportedError when the class is nonzero.
SQASTensors normal_quantize(const ClassicalStructure& cl);
// Basis of constant shifts D over even labels with f_{ij}^k D_k = 0.
std::vector<std::map<int, Scalar>> d_ambiguity(const GradedBasis& basis, const std::map<Tuple, Scalar>& f);

}  // namespace sqas
