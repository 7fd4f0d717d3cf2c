#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqas/linalg.hpp"
#include "sqas/structure.hpp"

namespace sqas {

using Params = std::map<std::string, Scalar>;

struct ParamSpec {
  std::string name;
  Scalar default_value;
  std::string description;
};

struct CatalogInfo {
  std::string id;
  std::string description;
  bool infinite = false;
  std::vector<ParamSpec> params;
};

// Operators of a structure before reading off tensors.
struct OperatorSet {
  GradedBasis basis;
  std::map<int, Operator> ops;
  std::vector<std::string> names;
};

const std::vector<CatalogInfo>& catalog_list();
const CatalogInfo& catalog_info(const std::string& id);
bool is_infinite_family(const std::string& id);

// Finite entries ignore truncation (pass -1). Infinite families need truncation >= 1.
OperatorSet catalog_operators(const std::string& id, const Params& params = {}, int truncation = -1);
SQASTensors instantiate(const std::string& id, const Params& params = {}, int truncation = -1);

// Truncation at which every F at level <= 2g+n-2 is exact. Finite entries: their dimension.
int support_bound(const std::string& id, const Params& params, int g, int n);
// Largest index whose constraint residuals are fully contained in a truncation.
int truncation_scope(const std::string& id, const Params& params, int truncation);

// Mode weight of each variable of an infinite family (twice the mode number).
std::vector<int> family_weights(const std::string& id, const Params& params, int truncation);

struct SuperFrobeniusAlgebra {
  GradedBasis basis;  // labels 1..d, no extra fermion
  // e_i e_j = sum_k mult[{i,j}][k] e_k
  std::map<std::pair<int, int>, std::map<int, Scalar>> mult;
  std::vector<Scalar> unit;  // coefficients of the unit, index 1..d (slot 0 unused)
  Matrix form;               // form[i-1][j-1] = phi(e_i, e_j)

  std::vector<Scalar> product(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  Scalar pairing(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  // Throws std::invalid_argument on a non-supercommutative, non-associative or odd form.
  void validate() const;
};

SuperFrobeniusAlgebra frobenius_even_line();
SuperFrobeniusAlgebra frobenius_grassmann2();

// A_{ijk} = phi(1, tA e_i e_j e_k), B_{ij}^k = phi(1, tB e_i e_j e^k), C_i^{jk} = phi(1, tC e_i e^j e^k).
SQASTensors frobenius_to_airy(const SuperFrobeniusAlgebra& alg, const std::vector<Scalar>& theta_A,
                              const std::vector<Scalar>& theta_B, const std::vector<Scalar>& theta_C,
                              const std::map<int, Scalar>& D);

}  // namespace sqas
