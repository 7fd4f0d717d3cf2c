#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqas/graded.hpp"
#include "sqas/weyl.hpp"

namespace sqas {

struct Violation {
  std::string constraint;
  Tuple indices;
  Scalar residual;
};

struct ConstraintReport {
  bool passed = true;
  std::vector<Violation> violations;
  void add(std::string constraint, Tuple indices, Scalar residual);
  std::size_t count(const std::string& constraint) const;
};

// L_i = hbar d_i - 1/2 A_{iab} x^a x^b - hbar B_{ia}^b x^a d_b - 1/2 hbar^2 C_i^{ab} d_a d_b - hbar D_i
struct SQASTensors {
  GradedBasis basis;
  SparseGradedTensor A{3, {{1, 2}}};
  SparseGradedTensor B{3, {}};
  SparseGradedTensor C{3, {{1, 2}}};
  std::map<int, Scalar> D;
  // Structure constants (i,j,k); derived from B unless f_supplied.
  std::map<Tuple, Scalar> f;
  bool f_supplied = false;

  std::string name;
  std::string source;
  std::vector<std::string> variable_names;
  // Truncated families: residuals are only meaningful for free indices <= check_scope.
  int check_scope = -1;

  SQASTensors() = default;
  explicit SQASTensors(GradedBasis b) : basis(std::move(b)) {}

  void set_A(const Tuple& iab, const Scalar& v) { A.set(iab, v, basis); }
  void set_B(const Tuple& iab, const Scalar& v) { B.set(iab, v, basis); }
  void set_C(const Tuple& iab, const Scalar& v) { C.set(iab, v, basis); }
  void set_D(int i, const Scalar& v);
  Scalar get_A(const Tuple& iab) const { return A.get(iab, basis); }
  Scalar get_B(const Tuple& iab) const { return B.get(iab, basis); }
  Scalar get_C(const Tuple& iab) const { return C.get(iab, basis); }
  Scalar get_D(int i) const;

  // Checks label slots, evenness and index ranges; throws std::invalid_argument.
  void validate() const;
  bool in_scope(int index) const { return check_scope < 0 || index <= check_scope; }
  std::vector<std::string> names() const;
};

// f_{ij}^k = (-1)^{|i||j|} B_{ij}^k - B_{ji}^k over labels.
std::map<Tuple, Scalar> derived_f(const SQASTensors& t);
// Supplied f when present, derived f otherwise.
std::map<Tuple, Scalar> effective_f(const SQASTensors& t);

Operator to_operator(const SQASTensors& t, int i);
// Reads tensors back from operators of the quadratic form; throws std::invalid_argument otherwise.
SQASTensors from_operators(const GradedBasis& basis, const std::map<int, Operator>& ops);

ConstraintReport verify_airy(const SQASTensors& t);

// [L_i, L_j] - hbar f_{ij}^k L_k, restricted to monomials within check_scope.
Operator commutator_residual(const SQASTensors& t, int i, int j);
// Commutator route over all label pairs inside check_scope.
ConstraintReport verify_by_commutators(const SQASTensors& t);

}  // namespace sqas
