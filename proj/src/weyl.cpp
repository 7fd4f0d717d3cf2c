#include "sqas/weyl.hpp"

#include <sstream>

namespace sqas {

namespace {

struct Ordered {
  long c;
  Tuple x;
  Tuple d;
};

// d^{B} x^{C} rewritten in normal order.
std::vector<Ordered> normal_order(const Tuple& B, const Tuple& C, const OddMask& odd) {
  if (B.empty()) return {Ordered{1, C, {}}};
  const int b = B.back();
  Tuple B0(B.begin(), B.end() - 1);
  std::map<std::pair<Tuple, Tuple>, long> acc;
  for (std::size_t p = 0; p < C.size(); ++p) {
    if (C[p] != b) continue;
    int s = move_to_front_sign(C, p, odd);
    Tuple rest = C;
    rest.erase(rest.begin() + p);
    for (auto& t : normal_order(B0, rest, odd)) acc[{t.x, t.d}] += s * t.c;
  }
  int pass = (odd[b] && tuple_parity(C, odd)) ? -1 : 1;
  Tuple merged;
  for (auto& t : normal_order(B0, C, odd)) {
    int s = merge_graded(t.d, Tuple{b}, odd, merged);
    if (s == 0) continue;
    acc[{t.x, merged}] += pass * s * t.c;
  }
  std::vector<Ordered> out;
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back(Ordered{c, k.first, k.second});
  return out;
}

std::string var_name(int v, const std::vector<std::string>& names) {
  if (v >= 0 && static_cast<std::size_t>(v) < names.size() && !names[v].empty()) return names[v];
  return "x" + std::to_string(v);
}

}  // namespace

int key_parity(const OpKey& k, const OddMask& odd) { return tuple_parity(k.x, odd) ^ tuple_parity(k.d, odd); }

Operator& Operator::add(const Scalar& c, int hbar, Tuple xs, Tuple ds, const OddMask& odd) {
  int s1 = sort_graded(xs, odd);
  int s2 = sort_graded(ds, odd);
  if (s1 == 0 || s2 == 0 || c.is_zero()) return *this;
  return add_key(OpKey{hbar, std::move(xs), std::move(ds)}, s1 * s2 > 0 ? c : -c);
}

Operator& Operator::add_key(const OpKey& k, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Operator& Operator::operator+=(const Operator& o) {
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

Operator& Operator::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Scalar Operator::coeff(const OpKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

Operator Operator::even_part(const OddMask& odd) const {
  Operator r;
  for (const auto& [k, c] : terms_)
    if (!key_parity(k, odd)) r.terms_.emplace(k, c);
  return r;
}

Operator Operator::odd_part(const OddMask& odd) const {
  Operator r;
  for (const auto& [k, c] : terms_)
    if (key_parity(k, odd)) r.terms_.emplace(k, c);
  return r;
}

std::string Operator::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (k.hbar) os << "*hbar^" << k.hbar;
    for (int v : k.x) os << '*' << var_name(v, names);
    for (int v : k.d) os << "*d_" << var_name(v, names);
  }
  return os.str();
}

Operator multiply(const Operator& a, const Operator& b, const OddMask& odd) {
  Operator r;
  std::map<std::pair<Tuple, Tuple>, std::vector<Ordered>> cache;
  Tuple xs, ds;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      auto key = std::make_pair(ka.d, kb.x);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, normal_order(ka.d, kb.x, odd)).first;
      Scalar cc = ca * cb;
      for (const Ordered& t : it->second) {
        int s1 = merge_graded(ka.x, t.x, odd, xs);
        if (s1 == 0) continue;
        int s2 = merge_graded(t.d, kb.d, odd, ds);
        if (s2 == 0) continue;
        r.add_key(OpKey{ka.hbar + kb.hbar, xs, ds}, cc * Scalar(s1 * s2 * t.c));
      }
    }
  }
  return r;
}

Operator commutator(const Operator& a, const Operator& b, const OddMask& odd) {
  Operator parts_a[2] = {a.even_part(odd), a.odd_part(odd)};
  Operator parts_b[2] = {b.even_part(odd), b.odd_part(odd)};
  Operator r;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      if (parts_a[p].is_zero() || parts_b[q].is_zero()) continue;
      r += multiply(parts_a[p], parts_b[q], odd);
      Operator ba = multiply(parts_b[q], parts_a[p], odd);
      if (p && q)
        r += ba;
      else
        r -= ba;
    }
  }
  return r;
}

Operator constant_operator(const Scalar& c, int hbar) {
  Operator r;
  r.add_key(OpKey{hbar, {}, {}}, c);
  return r;
}

}  // namespace sqas
