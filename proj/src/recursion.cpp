#include "sqas/recursion.hpp"

#include <stdexcept>

namespace sqas {

FreeEnergyTable::FreeEnergyTable(SQASTensors t) : t_(std::make_shared<const SQASTensors>(std::move(t))) {
  t_->validate();
  const GradedBasis& bs = t_->basis;
  for (const auto& [k, v] : t_->B.entries()) {
    b_by_ia_[{k[0], k[1]}].push_back({k[2], v});
    b_by_upper_[k[2]].push_back({k[0], k[1]});
  }
  for (const auto& [k, v] : t_->C.expanded(bs)) {
    c_by_i_[k[0]].push_back({k[1], k[2], v});
    if (k[1] <= k[2]) c_by_pair_[{k[1], k[2]}].push_back(k[0]);
  }
  candidates_.resize(1);
  removal_.resize(1);
  by_level_.resize(1);
}

Scalar FreeEnergyTable::lookup(int g, Tuple t) const {
  const int level = 2 * g + static_cast<int>(t.size()) - 2;
  if (g < 0 || level < 1) return Scalar();
  if (level > max_read_level_) max_read_level_ = level;
  int s = sort_graded(t, t_->basis.odd_mask());
  if (s == 0) return Scalar();
  auto it = store_.find(TableKey{g, std::move(t)});
  if (it == store_.end()) return Scalar();
  return s > 0 ? it->second : -it->second;
}

Scalar FreeEnergyTable::recurse(int g, int i, const Tuple& rest) const {
  const OddMask& odd = t_->basis.odd_mask();
  const int n = static_cast<int>(rest.size());
  if (2 * g + n + 1 < 3) return Scalar();
  Scalar sum;
  if (g == 0 && n == 2) sum += t_->get_A({i, rest[0], rest[1]});
  if (g == 1 && n == 0) sum += t_->get_D(i);

  // B-term
  Tuple buf;
  for (int k = 0; k < n; ++k) {
    auto it = b_by_ia_.find({i, rest[k]});
    if (it == b_by_ia_.end()) continue;
    int sigma = move_to_front_sign(rest, k, odd);
    for (const auto& [b, v] : it->second) {
      buf.assign(1, b);
      for (int q = 0; q < n; ++q)
        if (q != k) buf.push_back(rest[q]);
      Scalar f = lookup(g, buf);
      if (f.is_zero()) continue;
      sum += sigma > 0 ? v * f : -(v * f);
    }
  }

  auto cit = c_by_i_.find(i);
  if (cit == c_by_i_.end()) return sum;
  const auto& centries = cit->second;
  const Scalar half = Scalar::fraction(1, 2);

  // C-term with a lower genus
  if (g >= 1) {
    for (const auto& [b, c, v] : centries) {
      buf.assign({c, b});
      buf.insert(buf.end(), rest.begin(), rest.end());
      Scalar f = lookup(g - 1, buf);
      if (!f.is_zero()) sum += half * v * f;
    }
  }

  // splitting term over ordered subsequences and genus splits
  Tuple phi1, phi2;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    phi1.clear();
    phi2.clear();
    int odd_in_2 = 0, inversions = 0;
    for (int q = 0; q < n; ++q) {
      if (mask & (1u << q)) {
        phi1.push_back(rest[q]);
        if (odd[rest[q]]) inversions += odd_in_2;
      } else {
        phi2.push_back(rest[q]);
        odd_in_2 += odd[rest[q]];
      }
    }
    const int sigma = (inversions & 1) ? -1 : 1;
    for (int g1 = 0; g1 <= g; ++g1) {
      const int g2 = g - g1;
      if (2 * g1 + static_cast<int>(phi1.size()) + 1 < 3) continue;
      if (2 * g2 + static_cast<int>(phi2.size()) + 1 < 3) continue;
      for (const auto& [b, c, v] : centries) {
        buf.assign(1, b);
        buf.insert(buf.end(), phi1.begin(), phi1.end());
        Scalar f1 = lookup(g1, buf);
        if (f1.is_zero()) continue;
        buf.assign(1, c);
        buf.insert(buf.end(), phi2.begin(), phi2.end());
        Scalar f2 = lookup(g2, buf);
        if (f2.is_zero()) continue;
        Scalar term = half * v * f1 * f2;
        sum += sigma > 0 ? term : -term;
      }
    }
  }
  return sum;
}

Scalar FreeEnergyTable::evaluate(const TableKey& k) const {
  const Tuple& T = k.indices;
  std::size_t p = 0;
  while (p < T.size() && T[p] < 1) ++p;
  if (p == T.size()) return Scalar();
  Tuple rest = T;
  rest.erase(rest.begin() + p);
  Scalar v = recurse(k.g, T[p], rest);
  return move_to_front_sign(T, p, t_->basis.odd_mask()) > 0 ? v : -v;
}

const std::set<TableKey>& FreeEnergyTable::candidates(int level) const {
  if (level < 1 || level > frontier_) throw std::out_of_range("candidates: level not computed");
  return candidates_[level];
}

void FreeEnergyTable::index_level(int level) {
  auto& rem = removal_[level];
  for (const TableKey& k : by_level_[level]) {
    const Tuple& T = k.indices;
    for (std::size_t p = 0; p < T.size(); ++p) {
      if (p > 0 && T[p] == T[p - 1]) continue;
      Tuple rest = T;
      rest.erase(rest.begin() + p);
      rem[T[p]].push_back({k.g, std::move(rest)});
    }
  }
}

void FreeEnergyTable::compute_level(int level) {
  const OddMask& odd = t_->basis.odd_mask();
  std::set<TableKey> cand;
  auto propose = [&](int g, Tuple t) {
    if (sort_graded(t, odd) == 0) return;
    if (tuple_parity(t, odd)) return;
    cand.insert(TableKey{g, std::move(t)});
  };
  if (level == 1) {
    for (const auto& [k, v] : t_->A.entries()) propose(0, k);
    for (const auto& [i, v] : t_->D) propose(1, {i});
  } else {
    for (const TableKey& k : by_level_[level - 1]) {
      const Tuple& T = k.indices;
      for (std::size_t p = 0; p < T.size(); ++p) {
        if (p > 0 && T[p] == T[p - 1]) continue;
        auto it = b_by_upper_.find(T[p]);
        if (it == b_by_upper_.end()) continue;
        Tuple rest = T;
        rest.erase(rest.begin() + p);
        for (const auto& [i, a] : it->second) {
          Tuple u = rest;
          u.push_back(i);
          u.push_back(a);
          propose(k.g, std::move(u));
        }
      }
      for (std::size_t p = 0; p < T.size(); ++p) {
        for (std::size_t q = p + 1; q < T.size(); ++q) {
          auto it = c_by_pair_.find({T[p], T[q]});
          if (it == c_by_pair_.end()) continue;
          Tuple rest;
          for (std::size_t r = 0; r < T.size(); ++r)
            if (r != p && r != q) rest.push_back(T[r]);
          for (int i : it->second) {
            Tuple u = rest;
            u.push_back(i);
            propose(k.g + 1, std::move(u));
          }
        }
      }
    }
    for (int l1 = 1; l1 <= level - 2; ++l1) {
      const int l2 = level - 1 - l1;
      for (const auto& [bc, labels] : c_by_pair_) {
        for (int swap = 0; swap < 2; ++swap) {
          if (swap && bc.first == bc.second) continue;
          int b = swap ? bc.second : bc.first;
          int c = swap ? bc.first : bc.second;
          auto i1 = removal_[l1].find(b);
          auto i2 = removal_[l2].find(c);
          if (i1 == removal_[l1].end() || i2 == removal_[l2].end()) continue;
          for (const auto& [g1, phi1] : i1->second) {
            for (const auto& [g2, phi2] : i2->second) {
              for (int i : labels) {
                Tuple u = phi1;
                u.insert(u.end(), phi2.begin(), phi2.end());
                u.push_back(i);
                propose(g1 + g2, std::move(u));
              }
            }
          }
        }
      }
    }
  }

  max_read_level_ = -1;
  std::vector<std::pair<TableKey, Scalar>> computed;
  for (const TableKey& k : cand) {
    Scalar v = evaluate(k);
    if (!v.is_zero()) computed.push_back({k, std::move(v)});
  }
  if (max_read_level_ >= level) locality_ok_ = false;
  by_level_.emplace_back();
  removal_.emplace_back();
  for (auto& [k, v] : computed) {
    by_level_[level].push_back(k);
    store_.emplace(k, std::move(v));
  }
  candidates_.push_back(std::move(cand));
  index_level(level);
  frontier_ = level;
}

void FreeEnergyTable::extend_to(int level) {
  while (frontier_ < level) compute_level(frontier_ + 1);
}

Scalar FreeEnergyTable::get(int g, const Tuple& indices) {
  if (g < 0) throw std::invalid_argument("get_F: negative genus");
  if (indices.empty()) throw std::invalid_argument("get_F: empty index tuple");
  for (int a : indices) t_->basis.require_valid(a);
  const int level = 2 * g + static_cast<int>(indices.size()) - 2;
  if (level < 1) return Scalar();
  extend_to(level);
  return lookup(g, indices);
}

FreeEnergyTable compute_free_energy(const SQASTensors& t, int max_level) {
  if (max_level < 1) throw std::invalid_argument("compute_free_energy: max_level must be >= 1");
  FreeEnergyTable table(t);
  table.extend_to(max_level);
  return table;
}

Scalar get_F(FreeEnergyTable& table, int g, const Tuple& indices) { return table.get(g, indices); }

ConstraintReport check_z2_symmetry(FreeEnergyTable& table, int max_level) {
  table.extend_to(max_level);
  ConstraintReport rep;
  const OddMask& odd = table.structure().basis.odd_mask();
  for (int level = 1; level <= max_level; ++level) {
    for (const TableKey& k : table.candidates(level)) {
      const Tuple& T = k.indices;
      Scalar stored = table.get(k.g, T);
      for (std::size_t p = 0; p < T.size(); ++p) {
        if (T[p] < 1 || (p > 0 && T[p] == T[p - 1])) continue;
        Tuple rest = T;
        rest.erase(rest.begin() + p);
        Scalar v = table.recurse(k.g, T[p], rest);
        if (move_to_front_sign(T, p, odd) < 0) v = -v;
        if (v != stored) {
          Tuple idx{k.g, static_cast<int>(p)};
          idx.insert(idx.end(), T.begin(), T.end());
          rep.add("Z2", idx, v - stored);
        }
      }
    }
  }
  return rep;
}

Scalar multiplicity_factor(const Tuple& sorted) {
  Scalar f(1);
  std::size_t p = 0;
  while (p < sorted.size()) {
    std::size_t q = p;
    while (q < sorted.size() && sorted[q] == sorted[p]) ++q;
    if (q - p > 1) f *= factorial(static_cast<int>(q - p));
    p = q;
  }
  return f;
}

Series free_energy_series(FreeEnergyTable& table, int max_level) {
  table.extend_to(max_level);
  Series s;
  for (const auto& [k, v] : table.entries()) {
    if (k.level() > max_level) continue;
    s.add(SeriesKey{k.g, k.indices}, v / multiplicity_factor(k.indices));
  }
  return s;
}

Series partition_series(FreeEnergyTable& table, int max_degree) {
  const OddMask& odd = table.structure().basis.odd_mask();
  if (max_degree < 1) {
    Series one;
    one.add(SeriesKey{}, Scalar(1));
    return one;
  }
  Series f = free_energy_series(table, max_degree).shifted(-1);
  return exp_series(f, odd, max_degree);
}

std::vector<SeriesCoefficient> to_coefficients(const Series& s) {
  std::vector<SeriesCoefficient> out;
  for (const auto& [k, v] : s.terms()) out.push_back(SeriesCoefficient{k.hbar, k.mono, v});
  return out;
}

std::vector<SeriesCoefficient> partition_coefficients(FreeEnergyTable& table, int max_degree) {
  return to_coefficients(partition_series(table, max_degree));
}

}  // namespace sqas
