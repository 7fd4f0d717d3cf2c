#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqas/scalar.hpp"

namespace sqas {

// Raised for operations outside the supported class of inputs.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}

using Tuple = std::vector<int>;
// odd[v] != 0 iff variable v is odd.
using OddMask = std::vector<unsigned char>;

class GradedBasis {
 public:
  GradedBasis() = default;
  // parities[a] for a = 0..M. Without the extra fermion entry 0 is ignored.
  GradedBasis(std::vector<Parity> parities, bool extra_fermion);
  // Parities of the labels 1..M only.
  static GradedBasis from_labels(const std::vector<Parity>& label_parities, bool extra_fermion);

  int max_index() const { return static_cast<int>(odd_.size()) - 1; }
  int size() const { return has_extra_ ? max_index() + 1 : max_index(); }
  bool has_extra_fermion() const { return has_extra_; }
  int first_index() const { return has_extra_ ? 0 : 1; }
  bool valid(int a) const { return a >= first_index() && a <= max_index(); }
  bool is_label(int i) const { return i >= 1 && i <= max_index(); }
  bool is_odd(int a) const { return odd_[a] != 0; }
  Parity parity(int a) const { return is_odd(a) ? Parity::odd : Parity::even; }
  const OddMask& odd_mask() const { return odd_; }

  void require_valid(int a) const;
  void require_label(int i) const;

  friend bool operator==(const GradedBasis& x, const GradedBasis& y) {
    return x.odd_ == y.odd_ && x.has_extra_ == y.has_extra_;
  }

 private:
  OddMask odd_{0};
  bool has_extra_ = false;
};

// Sign of reordering a product of graded symbols: element k of the new order is
// element perm[k] of the old one.
int koszul_sign(const std::vector<int>& perm, const std::vector<Parity>& parities);

// Sorts t ascending and returns the Koszul sign, or 0 when an odd index repeats.
int sort_graded(Tuple& t, const OddMask& odd);
// Ascending merge of two sorted tuples, out = a*b, with the sign of the shuffle (0 on odd repeat).
int merge_graded(const Tuple& a, const Tuple& b, const OddMask& odd, Tuple& out);
// Sign of moving t[p] to the front.
int move_to_front_sign(const Tuple& t, std::size_t p, const OddMask& odd);
int tuple_parity(const Tuple& t, const OddMask& odd);

std::pair<Tuple, Scalar> canonicalize(Tuple t, Scalar coeff, const GradedBasis& basis);

// Sparse tensor whose entries are graded-symmetric within contiguous slot groups.
class SparseGradedTensor {
 public:
  SparseGradedTensor() = default;
  SparseGradedTensor(int arity, std::vector<std::vector<int>> symmetry_groups);

  int arity() const { return arity_; }
  const std::vector<std::vector<int>>& symmetry_groups() const { return groups_; }

  // Canonicalizes t within the symmetry groups; returns the sign (0 on odd repeat).
  int canonical(Tuple& t, const OddMask& odd) const;

  void set(Tuple t, const Scalar& v, const GradedBasis& basis);
  void add(Tuple t, const Scalar& v, const GradedBasis& basis);
  Scalar get(Tuple t, const GradedBasis& basis) const;
  const std::map<Tuple, Scalar>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Every ordering within the groups, with signs applied.
  std::map<Tuple, Scalar> expanded(const GradedBasis& basis) const;

  friend bool operator==(const SparseGradedTensor& x, const SparseGradedTensor& y) {
    return x.arity_ == y.arity_ && x.entries_ == y.entries_;
  }

 private:
  void check(const Tuple& t, const GradedBasis& basis) const;

  int arity_ = 0;
  std::vector<std::vector<int>> groups_;
  std::map<Tuple, Scalar> entries_;
};

std::string tuple_string(const Tuple& t);

}  // namespace sqas
