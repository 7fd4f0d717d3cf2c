#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "sqas/series.hpp"
#include "sqas/structure.hpp"

namespace sqas {

struct TableKey {
  int g = 0;
  Tuple indices;
  auto operator<=>(const TableKey&) const = default;
  bool operator==(const TableKey&) const = default;
  int level() const { return 2 * g + static_cast<int>(indices.size()) - 2; }
};

struct SeriesCoefficient {
  int hbar_power = 0;
  Tuple monomial;
  Scalar value;
};

// Memoized F_{g,n}[a_1..a_n], stored for canonical (sorted) tuples at levels 2g+n-2 >= 1.
class FreeEnergyTable {
 public:
  explicit FreeEnergyTable(SQASTensors t);

  const SQASTensors& structure() const { return *t_; }
  int frontier() const { return frontier_; }
  void extend_to(int level);

  // Signed value for any index order; extends lazily.
  Scalar get(int g, const Tuple& indices);
  // Nonzero entries at levels <= frontier, sorted by (g, indices).
  const std::map<TableKey, Scalar>& entries() const { return store_; }

  // Right-hand side of the recursion for F_{g,n+1}[i, rest] with first index i >= 1,
  // reading only completed levels.
  Scalar recurse(int g, int i, const Tuple& rest) const;
  // Every tuple examined at a level, a superset of the support for any first index.
  const std::set<TableKey>& candidates(int level) const;

  // False if any computation at level L read an entry at level >= L.
  bool level_locality_held() const { return locality_ok_; }

 private:
  Scalar lookup(int g, Tuple t) const;
  Scalar evaluate(const TableKey& k) const;
  void compute_level(int level);
  void index_level(int level);

  std::shared_ptr<const SQASTensors> t_;
  int frontier_ = 0;
  std::map<TableKey, Scalar> store_;
  std::vector<std::set<TableKey>> candidates_;
  // per level: removed index -> (g, remaining canonical tuple)
  std::vector<std::map<int, std::vector<std::pair<int, Tuple>>>> removal_;
  std::vector<std::vector<TableKey>> by_level_;

  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> b_by_ia_;  // (i,a) -> (b, B_{ia}^b)
  std::map<int, std::vector<std::pair<int, int>>> b_by_upper_;                  // b -> (i, a)
  std::map<int, std::vector<std::tuple<int, int, Scalar>>> c_by_i_;              // i -> (b, c, C_i^{bc})
  std::map<std::pair<int, int>, std::vector<int>> c_by_pair_;                   // (b,c) -> i

  mutable int max_read_level_ = -1;
  bool locality_ok_ = true;
};

FreeEnergyTable compute_free_energy(const SQASTensors& t, int max_level);
Scalar get_F(FreeEnergyTable& table, int g, const Tuple& indices);
// Recomputes every tuple with each admissible index moved to the front and compares.
ConstraintReport check_z2_symmetry(FreeEnergyTable& table, int max_level);

// F = sum hbar^g / (mult!) F_{g,n}[T] x^T over levels <= max_level.
Series free_energy_series(FreeEnergyTable& table, int max_level);
// Z = exp(F / hbar) truncated at total degree 2a + b <= max_degree.
Series partition_series(FreeEnergyTable& table, int max_degree);
std::vector<SeriesCoefficient> partition_coefficients(FreeEnergyTable& table, int max_degree);
std::vector<SeriesCoefficient> to_coefficients(const Series& s);
// Product of factorials of index multiplicities in a sorted tuple.
Scalar multiplicity_factor(const Tuple& sorted);

}  // namespace sqas
