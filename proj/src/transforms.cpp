#include "sqas/transforms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sqas/linalg.hpp"

namespace sqas {

namespace {

constexpr int kMaxConjugations = 64;

// Derivative of a sorted monomial by one symbol; returns the factor (0 if absent).
Scalar symbol_derivative(const Tuple& m, int sym, const OddMask& smask, bool from_left, Tuple& rest) {
  auto first = std::find(m.begin(), m.end(), sym);
  if (first == m.end()) return Scalar();
  const std::size_t p = static_cast<std::size_t>(first - m.begin());
  rest = m;
  rest.erase(rest.begin() + p);
  if (!smask[sym]) return Scalar(static_cast<long>(std::count(m.begin(), m.end(), sym)));
  int passed = 0;
  if (from_left) {
    for (std::size_t q = 0; q < p; ++q) passed += smask[m[q]];
  } else {
    for (std::size_t q = p + 1; q < m.size(); ++q) passed += smask[m[q]];
  }
  return (passed & 1) ? Scalar(-1) : Scalar(1);
}

bool quadratic_shape(const OpKey& k, int i) {
  const std::size_t nx = k.x.size(), nd = k.d.size();
  if (k.hbar == 1 && nx == 0 && nd == 1) return k.d[0] == i;
  if (k.hbar == 0 && nx == 2 && nd == 0) return true;
  if (k.hbar == 1 && nx == 1 && nd == 1) return true;
  if (k.hbar == 2 && nx == 0 && nd == 2) return true;
  return k.hbar == 1 && nx == 0 && nd == 0;
}

Operator symbol_operator(int sym, const OddMask& odd) {
  Operator o;
  if (sym % 2 == 0) o.add(1, 0, {sym / 2}, {}, odd);
  else o.add(1, 1, {}, {sym / 2}, odd);
  return o;
}

Scalar f_entry(const std::map<Tuple, Scalar>& f, int i, int j, int k) {
  auto it = f.find({i, j, k});
  return it == f.end() ? Scalar() : it->second;
}

std::vector<int> labels_of(const GradedBasis& b) {
  std::vector<int> v;
  for (int i = 1; i <= b.max_index(); ++i) v.push_back(i);
  return v;
}

}  // namespace

// ---------------------------------------------------------------- gauge

void GaugeData::validate(const GradedBasis& basis) const {
  const OddMask& odd = basis.odd_mask();
  for (const auto& [T, v] : terms) {
    if (T.size() < 2) throw std::invalid_argument("gauge: tuples need at least two indices");
    for (int a : T) basis.require_valid(a);
    if (!std::is_sorted(T.begin(), T.end())) throw std::invalid_argument("gauge: tuple " + tuple_string(T) + " is not sorted");
    for (std::size_t p = 1; p < T.size(); ++p)
      if (T[p] == T[p - 1] && odd[T[p]]) throw std::invalid_argument("gauge: repeated odd index in " + tuple_string(T));
    if (tuple_parity(T, odd) != 0) throw std::invalid_argument("gauge: odd tuple " + tuple_string(T));
  }
}

int GaugeData::order() const {
  int k = 0;
  for (const auto& [T, v] : terms)
    if (!v.is_zero()) k = std::max(k, static_cast<int>(T.size()));
  return k;
}

Operator GaugeData::generator(const GradedBasis& basis) const {
  validate(basis);
  const OddMask& odd = basis.odd_mask();
  Operator X;
  for (const auto& [T, v] : terms) {
    if (v.is_zero()) continue;
    const int k = static_cast<int>(T.size());
    X.add(v * factorial(k - 1) / multiplicity_factor(T), k - 1, {}, T, odd);
  }
  return X;
}

GaugeData GaugeData::negated() const {
  GaugeData out = *this;
  for (auto& [T, v] : out.terms) v = -v;
  return out;
}

std::map<int, Operator> gauge_transform_operators(const SQASTensors& t, const GaugeData& s) {
  const OddMask& odd = t.basis.odd_mask();
  const Operator X = s.generator(t.basis);
  std::map<int, Operator> out;
  for (int i = 1; i <= t.basis.max_index(); ++i) {
    Operator acc = to_operator(t, i), term = acc;
    int n = 1;
    for (; n <= kMaxConjugations; ++n) {
      term = commutator(X, term, odd) * (Scalar(1) / Scalar(n));
      if (term.is_zero()) break;
      acc += term;
    }
    if (n > kMaxConjugations) throw std::runtime_error("gauge: conjugation series did not terminate");
    out[i] = std::move(acc);
  }
  return out;
}

SQASTensors gauge_transform_structure(const SQASTensors& t, const GaugeData& s) {
  std::map<int, Operator> ops = gauge_transform_operators(t, s);
  std::ostringstream extra;
  for (const auto& [i, op] : ops)
    for (const auto& [k, c] : op.terms())
      if (!quadratic_shape(k, i)) {
        Operator one;
        one.add_key(k, c);
        extra << " L_" << i << ": " << one.to_string(t.names()) << ";";
      }
  if (s.order() > 2 || !extra.str().empty())
    throw UnsupportedError("gauge: transformed operators leave the quadratic class:" + extra.str());
  SQASTensors out = from_operators(t.basis, ops);
  out.f = t.f;
  out.f_supplied = t.f_supplied;
  out.name = t.name;
  out.source = t.source;
  out.variable_names = t.variable_names;
  out.check_scope = t.check_scope;
  return out;
}

Series gauge_transform_series(const Series& Z, const GaugeData& s, const GradedBasis& basis, int max_degree) {
  const OddMask& odd = basis.odd_mask();
  const Operator X = s.generator(basis);
  Series acc = Z.truncated(max_degree), term = acc;
  for (int n = 1; !term.is_zero(); ++n) {
    term = apply(X, term, odd, max_degree);
    term *= Scalar(1) / Scalar(n);
    acc += term;
  }
  Series N;
  for (const auto& [k, v] : acc.terms())
    if (k.mono.empty()) N.add(k, v);
  if (N.coeff(0, {}) != Scalar(1)) throw std::invalid_argument("gauge: partition function must start with 1");
  return multiply(inverse_series(N, odd, max_degree), acc, odd, max_degree);
}

std::vector<SeriesCoefficient> gauge_transform_Z(FreeEnergyTable& table, const GaugeData& s, int max_degree) {
  const GradedBasis& basis = table.structure().basis;
  return to_coefficients(gauge_transform_series(partition_series(table, max_degree), s, basis, max_degree));
}

// ---------------------------------------------------------------- classical

OddMask symbol_mask(const GradedBasis& basis) {
  OddMask m(2 * basis.max_index() + 2, 0);
  for (int a = 0; a <= basis.max_index(); ++a) m[2 * a] = m[2 * a + 1] = basis.odd_mask()[a];
  return m;
}

void poly_add(ClassicalPoly& p, Tuple symbols, const Scalar& c, const OddMask& smask) {
  if (c.is_zero()) return;
  int s = sort_graded(symbols, smask);
  if (s == 0) return;
  Scalar& slot = p[symbols];
  slot += s > 0 ? c : -c;
  if (slot.is_zero()) p.erase(symbols);
}

ClassicalPoly poly_product(const ClassicalPoly& p, const ClassicalPoly& q, const OddMask& smask) {
  ClassicalPoly out;
  Tuple m;
  for (const auto& [m1, c1] : p)
    for (const auto& [m2, c2] : q) {
      int s = merge_graded(m1, m2, smask, m);
      if (s == 0) continue;
      poly_add(out, m, s > 0 ? c1 * c2 : -(c1 * c2), smask);
    }
  return out;
}

ClassicalPoly poisson_bracket(const ClassicalPoly& p, const ClassicalPoly& q, const GradedBasis& basis) {
  const OddMask smask = symbol_mask(basis);
  ClassicalPoly out;
  Tuple r1, r2, m;
  for (const auto& [m1, c1] : p) {
    for (const auto& [m2, c2] : q) {
      for (int a = basis.first_index(); a <= basis.max_index(); ++a) {
        const bool odd_a = basis.is_odd(a);
        // (p <- d/dy_a)(d/dx^a -> q)
        Scalar d1 = symbol_derivative(m1, y_symbol(a), smask, false, r1);
        Scalar d2 = d1.is_zero() ? Scalar() : symbol_derivative(m2, x_symbol(a), smask, true, r2);
        if (!d2.is_zero()) {
          int s = merge_graded(r1, r2, smask, m);
          if (s != 0) poly_add(out, m, (s > 0 ? Scalar(1) : Scalar(-1)) * c1 * c2 * d1 * d2, smask);
        }
        // -(-1)^{|a|} (p <- d/dx^a)(d/dy_a -> q)
        d1 = symbol_derivative(m1, x_symbol(a), smask, false, r1);
        d2 = d1.is_zero() ? Scalar() : symbol_derivative(m2, y_symbol(a), smask, true, r2);
        if (!d2.is_zero()) {
          int s = merge_graded(r1, r2, smask, m);
          if (s != 0) {
            Scalar v = c1 * c2 * d1 * d2;
            if (s < 0) v = -v;
            poly_add(out, m, odd_a ? v : -v, smask);
          }
        }
      }
    }
  }
  return out;
}

std::string poly_string(const ClassicalPoly& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int s : m) {
      const int a = s / 2;
      std::string v = a < static_cast<int>(names.size()) && !names[a].empty() ? names[a] : std::to_string(a);
      os << (s % 2 == 0 ? " x[" : " y[") << v << "]";
    }
  }
  return os.str();
}

void ClassicalStructure::validate() const {
  const OddMask smask = symbol_mask(basis);
  for (const auto& [i, h] : hamiltonians) {
    basis.require_label(i);
    bool linear = false;
    for (const auto& [m, c] : h) {
      for (int s : m)
        if (s < 0 || s >= static_cast<int>(smask.size()) || !basis.valid(s / 2))
          throw std::invalid_argument("classical: symbol out of range in L_" + std::to_string(i));
      if (m.size() > 2) throw std::invalid_argument("classical: L_" + std::to_string(i) + " has degree > 2");
      if (m.empty()) throw std::invalid_argument("classical: L_" + std::to_string(i) + " has a constant term");
      if (m.size() == 1) {
        if (m[0] != y_symbol(i) || c != Scalar(1))
          throw std::invalid_argument("classical: linear part of L_" + std::to_string(i) + " is not y_i");
        linear = true;
      }
      if (tuple_parity(m, smask) != (basis.is_odd(i) ? 1 : 0))
        throw std::invalid_argument("classical: L_" + std::to_string(i) + " has a term of wrong parity");
    }
    if (!linear) throw std::invalid_argument("classical: L_" + std::to_string(i) + " lacks y_i");
  }
}

ClassicalStructure classical_limit(const SQASTensors& t) {
  ClassicalStructure cl;
  cl.basis = t.basis;
  cl.f = effective_f(t);
  cl.names = t.names();
  for (int a = 0; a <= t.basis.max_index(); ++a) cl.origin.push_back(a);
  const OddMask smask = symbol_mask(t.basis);
  const Scalar half = Scalar::fraction(1, 2);
  for (int i = 1; i <= t.basis.max_index(); ++i) poly_add(cl.hamiltonians[i], {y_symbol(i)}, 1, smask);
  for (const auto& [iab, v] : t.A.expanded(t.basis))
    poly_add(cl.hamiltonians[iab[0]], {x_symbol(iab[1]), x_symbol(iab[2])}, -(half * v), smask);
  for (const auto& [iab, v] : t.B.expanded(t.basis))
    poly_add(cl.hamiltonians[iab[0]], {x_symbol(iab[1]), y_symbol(iab[2])}, -v, smask);
  for (const auto& [iab, v] : t.C.expanded(t.basis))
    poly_add(cl.hamiltonians[iab[0]], {y_symbol(iab[1]), y_symbol(iab[2])}, -(half * v), smask);
  return cl;
}

ConstraintReport check_poisson(const ClassicalStructure& cl) {
  ConstraintReport rep;
  const OddMask smask = symbol_mask(cl.basis);
  for (const auto& [i, Li] : cl.hamiltonians) {
    for (const auto& [j, Lj] : cl.hamiltonians) {
      ClassicalPoly r = poisson_bracket(Li, Lj, cl.basis);
      for (const auto& [k, Lk] : cl.hamiltonians) {
        Scalar f = f_entry(cl.f, i, j, k);
        if (f.is_zero()) continue;
        for (const auto& [m, c] : Lk) poly_add(r, m, -(f * c), smask);
      }
      for (const auto& [m, c] : r) {
        Tuple idx{i, j};
        idx.insert(idx.end(), m.begin(), m.end());
        rep.add("poisson", idx, c);
      }
    }
  }
  return rep;
}

Series classical_free_energy(FreeEnergyTable& table, int max_degree) {
  Series out;
  if (max_degree < 3) return out;
  const Series full = free_energy_series(table, max_degree - 2);
  for (const auto& [k, v] : full.terms())
    if (k.hbar == 0 && static_cast<int>(k.mono.size()) <= max_degree) out.add(k, v);
  return out;
}

ConstraintReport check_lagrangian(const ClassicalStructure& cl, FreeEnergyTable& table, int max_degree) {
  if (!(cl.basis == table.structure().basis)) throw std::invalid_argument("check_lagrangian: basis mismatch");
  const OddMask& odd = cl.basis.odd_mask();
  const Series F = classical_free_energy(table, max_degree + 1);
  std::map<int, Series> dF;
  for (int a = cl.basis.first_index(); a <= cl.basis.max_index(); ++a) dF[a] = derivative(F, a, odd);
  ConstraintReport rep;
  for (const auto& [i, h] : cl.hamiltonians) {
    Series R;
    for (const auto& [m, c] : h) {
      Series prod;
      prod.add(SeriesKey{0, {}}, c);
      for (int s : m) {
        Series factor;
        if (s % 2 == 0) factor.add(SeriesKey{0, {s / 2}}, 1);
        else factor = dF[s / 2];
        prod = multiply(prod, factor, odd, max_degree);
      }
      R += prod;
    }
    const Series residual = R.truncated(max_degree);
    for (const auto& [k, v] : residual.terms()) {
      Tuple idx{i};
      idx.insert(idx.end(), k.mono.begin(), k.mono.end());
      rep.add("lagrangian", idx, v);
    }
  }
  return rep;
}

ClassicalStructure bosonic_reduction(const ClassicalStructure& cl) {
  std::vector<int> map(cl.basis.max_index() + 1, -1);
  std::vector<Parity> parities;
  ClassicalStructure out;
  out.names.push_back("");
  out.origin.push_back(-1);
  for (int a = 1; a <= cl.basis.max_index(); ++a) {
    if (cl.basis.is_odd(a)) continue;
    map[a] = static_cast<int>(parities.size()) + 1;
    parities.push_back(Parity::even);
    out.names.push_back(a < static_cast<int>(cl.names.size()) ? cl.names[a] : std::to_string(a));
    out.origin.push_back(a < static_cast<int>(cl.origin.size()) ? cl.origin[a] : a);
  }
  out.basis = GradedBasis::from_labels(parities, false);
  const OddMask smask = symbol_mask(out.basis);
  const OddMask old_mask = symbol_mask(cl.basis);
  for (const auto& [i, h] : cl.hamiltonians) {
    if (cl.basis.is_odd(i)) continue;
    ClassicalPoly& nh = out.hamiltonians[map[i]];
    for (const auto& [m, c] : h) {
      if (std::any_of(m.begin(), m.end(), [&](int s) { return old_mask[s] != 0; })) continue;
      Tuple nm;
      for (int s : m) nm.push_back(2 * map[s / 2] + s % 2);
      poly_add(nh, nm, c, smask);
    }
  }
  for (const auto& [ijk, v] : cl.f) {
    if (map[ijk[0]] < 0 || map[ijk[1]] < 0 || map[ijk[2]] < 0) continue;
    out.f[{map[ijk[0]], map[ijk[1]], map[ijk[2]]}] = v;
  }
  return out;
}

std::map<int, Operator> quantize(const ClassicalStructure& cl, Ordering ordering) {
  cl.validate();
  const OddMask& odd = cl.basis.odd_mask();
  const OddMask smask = symbol_mask(cl.basis);
  std::map<int, Operator> out;
  for (const auto& [i, h] : cl.hamiltonians) {
    Operator op;
    for (const auto& [m, c] : h) {
      if (ordering == Ordering::weyl && m.size() == 2 && (m[0] % 2) != (m[1] % 2)) {
        Operator u = symbol_operator(m[0], odd), v = symbol_operator(m[1], odd);
        Operator sym = multiply(u, v, odd);
        Operator rev = multiply(v, u, odd);
        sym += (smask[m[0]] && smask[m[1]]) ? rev * Scalar(-1) : rev;
        op += sym * (c * Scalar::fraction(1, 2));
        continue;
      }
      // normal order: coordinates first, keeping relative order
      Tuple xs, ds;
      int odd_y_seen = 0, swaps = 0;
      for (int s : m) {
        if (s % 2 == 0) {
          xs.push_back(s / 2);
          if (smask[s]) swaps += odd_y_seen;
        } else {
          ds.push_back(s / 2);
          odd_y_seen += smask[s];
        }
      }
      const int h_pow = static_cast<int>(ds.size());
      op.add((swaps & 1) ? -c : c, h_pow, xs, ds, odd);
    }
    out[i] = std::move(op);
  }
  return out;
}

SQASTensors weyl_quantize(const ClassicalStructure& cl) {
  SQASTensors t = from_operators(cl.basis, quantize(cl, Ordering::weyl));
  t.f = cl.f;
  t.f_supplied = derived_f(t) != cl.f;
  t.variable_names = cl.names;
  return t;
}

std::vector<std::map<int, Scalar>> d_ambiguity(const GradedBasis& basis, const std::map<Tuple, Scalar>& f) {
  std::vector<int> unknowns;
  for (int k : labels_of(basis))
    if (!basis.is_odd(k)) unknowns.push_back(k);
  std::map<int, std::size_t> col;
  for (std::size_t c = 0; c < unknowns.size(); ++c) col[unknowns[c]] = c;
  std::map<std::pair<int, int>, std::vector<Scalar>> rows;
  for (const auto& [ijk, v] : f) {
    auto it = col.find(ijk[2]);
    if (it == col.end() || v.is_zero()) continue;
    auto& row = rows[{ijk[0], ijk[1]}];
    if (row.empty()) row.assign(unknowns.size(), Scalar());
    row[it->second] += v;
  }
  Matrix m;
  for (auto& [ij, row] : rows) m.push_back(row);
  std::vector<std::map<int, Scalar>> out;
  LinearSolution sol = solve_linear(m, std::vector<Scalar>(m.size()), unknowns.size());
  for (const auto& vec : sol.nullspace) {
    std::map<int, Scalar> d;
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (!vec[c].is_zero()) d[unknowns[c]] = vec[c];
    out.push_back(std::move(d));
  }
  return out;
}

CocycleResult cocycle(const ClassicalStructure& cl, Ordering ordering) {
  const OddMask& odd = cl.basis.odd_mask();
  const std::map<int, Operator> L = quantize(cl, ordering);
  CocycleResult res;
  const OpKey hbar2{2, {}, {}};
  for (const auto& [i, Li] : L) {
    for (const auto& [j, Lj] : L) {
      Operator r = commutator(Li, Lj, odd);
      for (const auto& [k, Lk] : L) {
        Scalar f = f_entry(cl.f, i, j, k);
        if (!f.is_zero()) r -= multiply(constant_operator(f, 1), Lk, odd);
      }
      for (const auto& [key, c] : r.terms()) {
        if (key == hbar2) res.zeta[{i, j}] = c;
        else res.constant = false;
      }
    }
  }
  auto zeta = [&](int i, int j) {
    auto it = res.zeta.find({i, j});
    return it == res.zeta.end() ? Scalar() : it->second;
  };
  const std::vector<int> labels = labels_of(cl.basis);
  for (int a : labels)
    for (int b : labels)
      for (int c : labels) {
        Scalar s;
        for (int k : labels) {
          s += f_entry(cl.f, a, b, k) * zeta(k, c);
          s -= f_entry(cl.f, b, c, k) * zeta(a, k);
          Scalar t = f_entry(cl.f, a, c, k) * zeta(b, k);
          s += (cl.basis.is_odd(a) && cl.basis.is_odd(b)) ? -t : t;
        }
        if (!s.is_zero()) res.cocycle_condition = false;
      }

  std::vector<int> unknowns;
  for (int k : labels)
    if (!cl.basis.is_odd(k)) unknowns.push_back(k);
  Matrix m;
  std::vector<Scalar> rhs;
  for (int i : labels)
    for (int j : labels) {
      std::vector<Scalar> row(unknowns.size());
      bool any = false;
      for (std::size_t c = 0; c < unknowns.size(); ++c) {
        row[c] = f_entry(cl.f, i, j, unknowns[c]);
        any = any || !row[c].is_zero();
      }
      Scalar z = zeta(i, j);
      if (!any && z.is_zero()) continue;
      m.push_back(std::move(row));
      rhs.push_back(z);
    }
  LinearSolution sol = solve_linear(m, rhs, unknowns.size());
  res.solvable = res.constant && sol.solvable;
  if (res.solvable)
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (!sol.particular[c].is_zero()) res.D[unknowns[c]] = sol.particular[c];
  res.ambiguity = d_ambiguity(cl.basis, cl.f);
  return res;
}

SQASTensors normal_quantize(const ClassicalStructure& cl) {
  CocycleResult z = cocycle(cl, Ordering::normal);
  if (!z.solvable) throw UnsupportedError("quantize: the cocycle is not a coboundary");
  std::map<int, Operator> ops = quantize(cl, Ordering::normal);
  for (const auto& [i, d] : z.D) ops[i] += constant_operator(d, 1);
  SQASTensors t = from_operators(cl.basis, ops);
  t.f = cl.f;
  t.f_supplied = derived_f(t) != cl.f;
  t.variable_names = cl.names;
  return t;
}

}  // namespace sqas
