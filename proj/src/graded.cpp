#include "sqas/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sqas {

GradedBasis::GradedBasis(std::vector<Parity> parities, bool extra_fermion) : has_extra_(extra_fermion) {
  if (parities.empty()) parities.push_back(Parity::odd);
  if (extra_fermion && parities[0] != Parity::odd)
    throw std::invalid_argument("the extra fermionic index 0 must be odd");
  odd_.assign(parities.size(), 0);
  for (std::size_t a = 0; a < parities.size(); ++a) odd_[a] = parities[a] == Parity::odd ? 1 : 0;
  odd_[0] = 1;
}

GradedBasis GradedBasis::from_labels(const std::vector<Parity>& label_parities, bool extra_fermion) {
  std::vector<Parity> p{Parity::odd};
  p.insert(p.end(), label_parities.begin(), label_parities.end());
  return GradedBasis(std::move(p), extra_fermion);
}

void GradedBasis::require_valid(int a) const {
  if (!valid(a)) throw std::invalid_argument("invalid index " + std::to_string(a));
}

void GradedBasis::require_label(int i) const {
  if (!is_label(i)) throw std::invalid_argument("invalid label index " + std::to_string(i));
}

int koszul_sign(const std::vector<int>& perm, const std::vector<Parity>& parities) {
  const std::size_t n = perm.size();
  if (parities.size() != n) throw std::invalid_argument("koszul_sign: length mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p]) throw std::invalid_argument("koszul_sign: not a permutation");
    seen[p] = 1;
  }
  int s = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (perm[k] > perm[l] && parities[perm[k]] == Parity::odd && parities[perm[l]] == Parity::odd) s = -s;
  return s;
}

int sort_graded(Tuple& t, const OddMask& odd) {
  int s = 1;
  for (std::size_t k = 1; k < t.size(); ++k) {
    int v = t[k];
    std::size_t j = k;
    bool vo = odd[v] != 0;
    while (j > 0 && t[j - 1] > v) {
      if (vo && odd[t[j - 1]]) s = -s;
      t[j] = t[j - 1];
      --j;
    }
    t[j] = v;
    if (vo && j > 0 && t[j - 1] == v) return 0;
  }
  return s;
}

int merge_graded(const Tuple& a, const Tuple& b, const OddMask& odd, Tuple& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int odd_left = 0;  // odd elements of a not yet emitted
  for (int v : a) odd_left += odd[v];
  int s = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      if (j < b.size() && a[i] == b[j] && odd[a[i]]) return 0;
      odd_left -= odd[a[i]];
      out.push_back(a[i++]);
    } else {
      if (odd[b[j]] && (odd_left & 1)) s = -s;
      out.push_back(b[j++]);
    }
  }
  return s;
}

int move_to_front_sign(const Tuple& t, std::size_t p, const OddMask& odd) {
  if (!odd[t[p]]) return 1;
  int c = 0;
  for (std::size_t q = 0; q < p; ++q) c += odd[t[q]];
  return (c & 1) ? -1 : 1;
}

int tuple_parity(const Tuple& t, const OddMask& odd) {
  int p = 0;
  for (int v : t) p ^= odd[v];
  return p;
}

std::pair<Tuple, Scalar> canonicalize(Tuple t, Scalar coeff, const GradedBasis& basis) {
  for (int a : t) basis.require_valid(a);
  int s = sort_graded(t, basis.odd_mask());
  if (s == 0) return {std::move(t), Scalar()};
  if (s < 0) coeff = -coeff;
  return {std::move(t), std::move(coeff)};
}

SparseGradedTensor::SparseGradedTensor(int arity, std::vector<std::vector<int>> symmetry_groups)
    : arity_(arity), groups_(std::move(symmetry_groups)) {
  for (const auto& g : groups_) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] < 0 || g[k] >= arity_ || (k > 0 && g[k] != g[k - 1] + 1))
        throw std::invalid_argument("symmetry groups must be contiguous slot ranges");
    }
  }
}

int SparseGradedTensor::canonical(Tuple& t, const OddMask& odd) const {
  int s = 1;
  for (const auto& g : groups_) {
    if (g.empty()) continue;
    Tuple part(t.begin() + g.front(), t.begin() + g.back() + 1);
    int ps = sort_graded(part, odd);
    if (ps == 0) return 0;
    s *= ps;
    std::copy(part.begin(), part.end(), t.begin() + g.front());
  }
  return s;
}

void SparseGradedTensor::check(const Tuple& t, const GradedBasis& basis) const {
  if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (int a : t) basis.require_valid(a);
}

void SparseGradedTensor::set(Tuple t, const Scalar& v, const GradedBasis& basis) {
  check(t, basis);
  int s = canonical(t, basis.odd_mask());
  if (s == 0) {
    if (!v.is_zero()) throw std::invalid_argument("nonzero value on a repeated odd index " + tuple_string(t));
    return;
  }
  if (v.is_zero()) {
    entries_.erase(t);
    return;
  }
  if (tuple_parity(t, basis.odd_mask()))
    throw std::invalid_argument("tensor entry " + tuple_string(t) + " has odd total parity");
  entries_[t] = s > 0 ? v : -v;
}

void SparseGradedTensor::add(Tuple t, const Scalar& v, const GradedBasis& basis) {
  if (v.is_zero()) return;
  check(t, basis);
  Tuple c = t;
  int s = canonical(c, basis.odd_mask());
  if (s == 0) throw std::invalid_argument("nonzero value on a repeated odd index " + tuple_string(t));
  Scalar cur = get(c, basis);
  set(c, cur + (s > 0 ? v : -v), basis);
}

Scalar SparseGradedTensor::get(Tuple t, const GradedBasis& basis) const {
  check(t, basis);
  int s = canonical(t, basis.odd_mask());
  if (s == 0) return Scalar();
  auto it = entries_.find(t);
  if (it == entries_.end()) return Scalar();
  return s > 0 ? it->second : -it->second;
}

std::map<Tuple, Scalar> SparseGradedTensor::expanded(const GradedBasis& basis) const {
  std::map<Tuple, Scalar> out;
  for (const auto& [t, v] : entries_) {
    // enumerate distinct orderings of every group
    std::vector<Tuple> current{t};
    for (const auto& g : groups_) {
      if (g.size() < 2) continue;
      std::vector<Tuple> next;
      for (const Tuple& base : current) {
        Tuple part(base.begin() + g.front(), base.begin() + g.back() + 1);
        std::sort(part.begin(), part.end());
        do {
          Tuple u = base;
          std::copy(part.begin(), part.end(), u.begin() + g.front());
          next.push_back(u);
        } while (std::next_permutation(part.begin(), part.end()));
      }
      current = std::move(next);
    }
    for (const Tuple& u : current) {
      Tuple c = u;
      int s = canonical(c, basis.odd_mask());
      out[u] = s > 0 ? v : -v;
    }
  }
  return out;
}

std::string tuple_string(const Tuple& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  os << ']';
  return os.str();
}

}  // namespace sqas
