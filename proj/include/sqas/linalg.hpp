#pragma once

#include <vector>

#include "sqas/scalar.hpp"

namespace sqas {

using Matrix = std::vector<std::vector<Scalar>>;

struct LinearSolution {
  bool solvable = false;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
};

// Exact Gauss-Jordan solve of m x = rhs; m has rows of equal length.
LinearSolution solve_linear(const Matrix& m, const std::vector<Scalar>& rhs, std::size_t columns);

// Throws std::domain_error when singular.
Matrix invert(const Matrix& m);

}  // namespace sqas
