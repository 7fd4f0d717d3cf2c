#include "sqas/structure.hpp"

#include <array>
#include <set>

namespace sqas {

void ConstraintReport::add(std::string constraint, Tuple indices, Scalar residual) {
  passed = false;
  violations.push_back(Violation{std::move(constraint), std::move(indices), std::move(residual)});
}

std::size_t ConstraintReport::count(const std::string& constraint) const {
  std::size_t n = 0;
  for (const auto& v : violations) n += v.constraint == constraint;
  return n;
}

void SQASTensors::set_D(int i, const Scalar& v) {
  basis.require_label(i);
  if (v.is_zero()) {
    D.erase(i);
    return;
  }
  if (basis.is_odd(i)) throw std::invalid_argument("D_i must vanish for odd i");
  D[i] = v;
}

Scalar SQASTensors::get_D(int i) const {
  auto it = D.find(i);
  return it == D.end() ? Scalar() : it->second;
}

void SQASTensors::validate() const {
  auto check3 = [&](const SparseGradedTensor& T, const char* what) {
    for (const auto& [k, v] : T.entries()) {
      if (!basis.is_label(k[0])) throw std::invalid_argument(std::string(what) + ": label slot must be >= 1");
      for (int a : k) basis.require_valid(a);
      if (tuple_parity(k, basis.odd_mask())) throw std::invalid_argument(std::string(what) + ": odd entry");
    }
  };
  check3(A, "A");
  check3(B, "B");
  check3(C, "C");
  for (const auto& [i, v] : D) {
    basis.require_label(i);
    if (basis.is_odd(i) && !v.is_zero()) throw std::invalid_argument("D: odd label");
  }
  for (const auto& [k, v] : f) {
    if (k.size() != 3) throw std::invalid_argument("f: arity must be 3");
    for (int a : k) basis.require_label(a);
    if (tuple_parity(k, basis.odd_mask())) throw std::invalid_argument("f: odd entry");
  }
}

std::vector<std::string> SQASTensors::names() const {
  std::vector<std::string> n = variable_names;
  n.resize(basis.max_index() + 1);
  for (int a = 0; a <= basis.max_index(); ++a)
    if (n[a].empty()) n[a] = (basis.is_odd(a) ? "t" : "x") + std::to_string(a);
  return n;
}

namespace {

int sgn2(const OddMask& odd, int a, int b) { return (odd[a] && odd[b]) ? -1 : 1; }

Scalar signed_value(int s, const Scalar& v) { return s > 0 ? v : -v; }

}  // namespace

std::map<Tuple, Scalar> derived_f(const SQASTensors& t) {
  const OddMask& odd = t.basis.odd_mask();
  std::map<Tuple, Scalar> f;
  for (const auto& [k, v] : t.B.entries()) {
    int i = k[0], j = k[1], c = k[2];
    if (!t.basis.is_label(j) || !t.basis.is_label(c)) continue;
    // contributes (-1)^{ij} B_{ij}^c to f_{ij}^c and -B_{ij}^c to f_{ji}^c
    Scalar& a = f[{i, j, c}];
    a += signed_value(sgn2(odd, i, j), v);
    Scalar& b = f[{j, i, c}];
    b -= v;
  }
  for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
  return f;
}

std::map<Tuple, Scalar> effective_f(const SQASTensors& t) { return t.f_supplied ? t.f : derived_f(t); }

Operator to_operator(const SQASTensors& t, int i) {
  t.basis.require_label(i);
  const OddMask& odd = t.basis.odd_mask();
  Operator op;
  op.add(Scalar(1), 1, {}, {i}, odd);
  const Scalar half = Scalar::fraction(1, 2);
  for (const auto& [k, v] : t.A.entries()) {
    if (k[0] != i) continue;
    op.add(-half * v, 0, {k[1], k[2]}, {}, odd);
    if (k[1] != k[2]) op.add(-half * v * Scalar(sgn2(odd, k[1], k[2])), 0, {k[2], k[1]}, {}, odd);
  }
  for (const auto& [k, v] : t.B.entries()) {
    if (k[0] != i) continue;
    op.add(-v, 1, {k[1]}, {k[2]}, odd);
  }
  for (const auto& [k, v] : t.C.entries()) {
    if (k[0] != i) continue;
    op.add(-half * v, 2, {}, {k[1], k[2]}, odd);
    if (k[1] != k[2]) op.add(-half * v * Scalar(sgn2(odd, k[1], k[2])), 2, {}, {k[2], k[1]}, odd);
  }
  Scalar d = t.get_D(i);
  if (!d.is_zero()) op.add(-d, 1, {}, {}, odd);
  return op;
}

SQASTensors from_operators(const GradedBasis& basis, const std::map<int, Operator>& ops) {
  SQASTensors t(basis);
  const OddMask& odd = basis.odd_mask();
  for (const auto& [i, op] : ops) {
    basis.require_label(i);
    bool linear_seen = false;
    for (const auto& [k, c] : op.terms()) {
      for (int a : k.x) basis.require_valid(a);
      for (int a : k.d) basis.require_valid(a);
      const std::size_t nx = k.x.size(), nd = k.d.size();
      std::string where = "operator " + std::to_string(i) + ": ";
      if (k.hbar == 1 && nx == 0 && nd == 1 && k.d[0] == i) {
        if (c != Scalar(1)) throw std::invalid_argument(where + "coefficient of hbar d_i must be 1");
        linear_seen = true;
      } else if (k.hbar == 0 && nx == 2 && nd == 0) {
        Scalar v = k.x[0] == k.x[1] ? Scalar(-2) * c : -c;
        t.A.add({i, k.x[0], k.x[1]}, v, basis);
      } else if (k.hbar == 1 && nx == 1 && nd == 1) {
        t.B.add({i, k.x[0], k.d[0]}, -c, basis);
      } else if (k.hbar == 2 && nx == 0 && nd == 2) {
        Scalar v = k.d[0] == k.d[1] ? Scalar(-2) * c : -c;
        t.C.add({i, k.d[0], k.d[1]}, v, basis);
      } else if (k.hbar == 1 && nx == 0 && nd == 0) {
        t.set_D(i, t.get_D(i) - c);
      } else {
        throw std::invalid_argument(where + "term outside the quadratic form");
      }
      if (key_parity(k, odd) != (odd[i] ? 1 : 0)) throw std::invalid_argument(where + "term of wrong parity");
    }
    if (!linear_seen) throw std::invalid_argument("operator " + std::to_string(i) + ": missing hbar d_i");
  }
  t.validate();
  return t;
}

namespace {

using Key4 = std::array<int, 4>;
using Acc4 = std::map<Key4, Scalar>;

void accumulate(Acc4& m, const Key4& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) it->second += v;
}

struct Entry2 {
  int p, q;
  Scalar v;
};

struct Indexed {
  std::map<Tuple, Scalar> Af, Cf;
  std::map<int, std::vector<Entry2>> A_mid;    // c -> (j, b) for A_{jcb}
  std::map<int, std::vector<Entry2>> A_first;  // k -> (a, b) for A_{kab}
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> A_pair;  // (a,b) -> (j, A_{jab})
  std::map<int, std::vector<Entry2>> B_col;    // c -> (j, b) for B_{jc}^b
  std::map<int, std::vector<Entry2>> B_first;  // k -> (a, b) for B_{ka}^b
  std::map<int, std::vector<Entry2>> C_first;  // k -> (a, b) for C_k^{ab}
};

Indexed index_tensors(const SQASTensors& t) {
  Indexed ix;
  ix.Af = t.A.expanded(t.basis);
  ix.Cf = t.C.expanded(t.basis);
  for (const auto& [k, v] : ix.Af) {
    ix.A_mid[k[1]].push_back({k[0], k[2], v});
    ix.A_first[k[0]].push_back({k[1], k[2], v});
    ix.A_pair[{k[1], k[2]}].push_back({k[0], v});
  }
  for (const auto& [k, v] : t.B.entries()) {
    ix.B_col[k[1]].push_back({k[0], k[2], v});
    ix.B_first[k[0]].push_back({k[1], k[2], v});
  }
  for (const auto& [k, v] : ix.Cf) ix.C_first[k[0]].push_back({k[1], k[2], v});
  return ix;
}

// Residual LHS(i,j,..) - (-1)^{|i||j|} LHS(j,i,..), reported for i <= j.
void report_antisym(const SQASTensors& t, const Acc4& lhs, const std::string& id, bool symmetric_ab, bool two_free,
                    ConstraintReport& rep) {
  const OddMask& odd = t.basis.odd_mask();
  std::set<Key4> keys;
  for (const auto& [k, v] : lhs) {
    if (v.is_zero()) continue;
    Key4 a = k, b = {k[1], k[0], k[2], k[3]};
    keys.insert(a[0] <= a[1] ? a : b);
  }
  auto get = [&](const Key4& k) {
    auto it = lhs.find(k);
    return it == lhs.end() ? Scalar() : it->second;
  };
  for (const Key4& k : keys) {
    if (symmetric_ab && k[2] > k[3]) {
      Key4 mirror = {k[0], k[1], k[3], k[2]};
      if (keys.count(mirror)) continue;
    }
    bool scoped = t.in_scope(k[0]) && t.in_scope(k[1]);
    if (!two_free) scoped = scoped && t.in_scope(k[2]) && t.in_scope(k[3]);
    if (!scoped) continue;
    Scalar r = get(k) - signed_value(sgn2(odd, k[0], k[1]), get({k[1], k[0], k[2], k[3]}));
    if (r.is_zero()) continue;
    Tuple idx = two_free ? Tuple{k[0], k[1]} : Tuple{k[0], k[1], k[2], k[3]};
    if (symmetric_ab && k[2] > k[3]) {
      idx = {k[0], k[1], k[3], k[2]};
      r = signed_value(sgn2(odd, k[2], k[3]), r);
    }
    rep.add(id, idx, r);
  }
}

}  // namespace

ConstraintReport verify_airy(const SQASTensors& t) {
  t.validate();
  ConstraintReport rep;
  const OddMask& odd = t.basis.odd_mask();
  const GradedBasis& bs = t.basis;
  Indexed ix = index_tensors(t);

  // (A)
  {
    std::set<Tuple> keys;
    for (const auto& [k, v] : ix.Af) {
      if (!bs.is_label(k[1]) || k[0] == k[1]) continue;
      keys.insert({std::min(k[0], k[1]), std::max(k[0], k[1]), k[2]});
    }
    for (const Tuple& k : keys) {
      if (!(t.in_scope(k[0]) && t.in_scope(k[1]) && t.in_scope(k[2]))) continue;
      Scalar r = t.get_A({k[1], k[0], k[2]}) - signed_value(sgn2(odd, k[0], k[1]), t.get_A({k[0], k[1], k[2]}));
      if (!r.is_zero()) rep.add("A", k, r);
    }
  }

  // (f)
  {
    std::map<Tuple, Scalar> fd = derived_f(t);
    if (t.f_supplied) {
      std::set<Tuple> keys;
      for (const auto& [k, v] : fd) keys.insert(k);
      for (const auto& [k, v] : t.f) keys.insert(k);
      for (const Tuple& k : keys) {
        if (!(t.in_scope(k[0]) && t.in_scope(k[1]) && t.in_scope(k[2]))) continue;
        auto a = t.f.find(k);
        auto b = fd.find(k);
        Scalar r = (a == t.f.end() ? Scalar() : a->second) - (b == fd.end() ? Scalar() : b->second);
        if (!r.is_zero()) rep.add("f", k, r);
      }
    }
    if (bs.has_extra_fermion()) {
      std::set<std::pair<int, int>> pairs;
      for (const auto& [k, v] : t.B.entries())
        if (k[2] == 0 && bs.is_label(k[1])) pairs.insert({std::min(k[0], k[1]), std::max(k[0], k[1])});
      for (auto [i, j] : pairs) {
        if (!(t.in_scope(i) && t.in_scope(j))) continue;
        Scalar r = signed_value(sgn2(odd, i, j), t.get_B({i, j, 0})) - t.get_B({j, i, 0});
        if (!r.is_zero()) rep.add("f", {i, j, 0}, r);
      }
    }
  }

  // (BA)
  {
    Acc4 lhs;
    for (const auto& [k, vb] : t.B.entries()) {
      int i = k[0], a = k[1], c = k[2];
      auto it = ix.A_mid.find(c);
      if (it != ix.A_mid.end()) {
        for (const auto& e : it->second) {
          Scalar v = vb * e.v;
          accumulate(lhs, {i, e.p, a, e.q}, v);
          accumulate(lhs, {i, e.p, e.q, a}, signed_value(sgn2(odd, a, e.q), v));
        }
      }
      if (bs.is_label(a)) {
        auto jt = ix.A_first.find(c);
        if (jt != ix.A_first.end())
          for (const auto& e : jt->second) accumulate(lhs, {i, a, e.p, e.q}, signed_value(sgn2(odd, i, a), vb * e.v));
      }
    }
    report_antisym(t, lhs, "BA", true, false, rep);
  }

  // (BB-CA)
  {
    Acc4 lhs;
    for (const auto& [k, vb] : t.B.entries()) {
      int i = k[0], a = k[1], c = k[2];
      auto it = ix.B_col.find(c);
      if (it != ix.B_col.end())
        for (const auto& e : it->second) accumulate(lhs, {i, e.p, a, e.q}, vb * e.v);
      if (bs.is_label(a)) {
        auto jt = ix.B_first.find(c);
        if (jt != ix.B_first.end())
          for (const auto& e : jt->second) accumulate(lhs, {i, a, e.p, e.q}, signed_value(sgn2(odd, i, a), vb * e.v));
      }
    }
    for (const auto& [k, vc] : ix.Cf) {
      int i = k[0], b = k[1], c = k[2];
      auto it = ix.A_mid.find(c);
      if (it == ix.A_mid.end()) continue;
      for (const auto& e : it->second) accumulate(lhs, {i, e.p, e.q, b}, signed_value(sgn2(odd, e.q, b), vc * e.v));
    }
    report_antisym(t, lhs, "BB-CA", false, false, rep);
  }

  // (CB)
  {
    Acc4 lhs;
    for (const auto& [k, vc] : ix.Cf) {
      int i = k[0], a = k[1], c = k[2];
      auto it = ix.B_col.find(c);
      if (it == ix.B_col.end()) continue;
      for (const auto& e : it->second) {
        Scalar v = vc * e.v;
        accumulate(lhs, {i, e.p, a, e.q}, v);
        accumulate(lhs, {i, e.p, e.q, a}, signed_value(sgn2(odd, a, e.q), v));
      }
    }
    for (const auto& [k, vb] : t.B.entries()) {
      int i = k[0], j = k[1], kk = k[2];
      if (!bs.is_label(j)) continue;
      auto it = ix.C_first.find(kk);
      if (it == ix.C_first.end()) continue;
      for (const auto& e : it->second) accumulate(lhs, {i, j, e.p, e.q}, signed_value(sgn2(odd, i, j), vb * e.v));
    }
    report_antisym(t, lhs, "CB", true, false, rep);
  }

  // (CA-BD)
  {
    Acc4 lhs;
    const Scalar half = Scalar::fraction(1, 2);
    for (const auto& [k, vc] : ix.Cf) {
      int i = k[0], b = k[1], a = k[2];
      auto it = ix.A_pair.find({a, b});
      if (it == ix.A_pair.end()) continue;
      for (const auto& [j, va] : it->second) accumulate(lhs, {i, j, 0, 0}, half * vc * va);
    }
    for (const auto& [k, vb] : t.B.entries()) {
      int i = k[0], j = k[1], kk = k[2];
      if (!bs.is_label(j) || !bs.is_label(kk)) continue;
      Scalar d = t.get_D(kk);
      if (!d.is_zero()) accumulate(lhs, {i, j, 0, 0}, signed_value(sgn2(odd, i, j), vb * d));
    }
    report_antisym(t, lhs, "CA-BD", false, true, rep);
  }
  return rep;
}

namespace {

bool key_in_scope(const SQASTensors& t, const OpKey& k) {
  for (int a : k.x)
    if (!t.in_scope(a)) return false;
  for (int a : k.d)
    if (!t.in_scope(a)) return false;
  return true;
}

Operator residual_from(const SQASTensors& t, const std::map<int, Operator>& ops, const std::map<Tuple, Scalar>& f, int i,
                       int j) {
  const OddMask& odd = t.basis.odd_mask();
  Operator r = commutator(ops.at(i), ops.at(j), odd);
  for (const auto& [k, v] : f) {
    if (k[0] != i || k[1] != j) continue;
    Operator lk = ops.count(k[2]) ? ops.at(k[2]) : to_operator(t, k[2]);
    for (const auto& [ok, oc] : lk.terms()) r.add_key(OpKey{ok.hbar + 1, ok.x, ok.d}, -(v * oc));
  }
  Operator out;
  for (const auto& [k, c] : r.terms())
    if (key_in_scope(t, k)) out.add_key(k, c);
  return out;
}

}  // namespace

Operator commutator_residual(const SQASTensors& t, int i, int j) {
  t.basis.require_label(i);
  t.basis.require_label(j);
  std::map<int, Operator> ops{{i, to_operator(t, i)}, {j, to_operator(t, j)}};
  return residual_from(t, ops, effective_f(t), i, j);
}

ConstraintReport verify_by_commutators(const SQASTensors& t) {
  ConstraintReport rep;
  std::map<int, Operator> ops;
  for (int i = 1; i <= t.basis.max_index(); ++i) ops[i] = to_operator(t, i);
  auto f = effective_f(t);
  for (int i = 1; i <= t.basis.max_index(); ++i) {
    if (!t.in_scope(i)) continue;
    for (int j = i; j <= t.basis.max_index(); ++j) {
      if (!t.in_scope(j)) continue;
      Operator r = residual_from(t, ops, f, i, j);
      for (const auto& [k, c] : r.terms()) {
        Tuple idx{i, j, k.hbar};
        idx.insert(idx.end(), k.x.begin(), k.x.end());
        idx.push_back(-1);
        idx.insert(idx.end(), k.d.begin(), k.d.end());
        rep.add("commutator", idx, c);
      }
    }
  }
  return rep;
}

}  // namespace sqas
