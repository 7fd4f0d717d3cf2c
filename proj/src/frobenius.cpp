#include <stdexcept>

#include "sqas/catalog.hpp"

namespace sqas {

namespace {

using Vec = std::vector<Scalar>;

Vec basis_vector(int d, int i) {
  Vec v(d + 1);
  v[i] = Scalar(1);
  return v;
}

int vec_parity(const Vec& v, const GradedBasis& b) {
  int p = -1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    int q = b.is_odd(static_cast<int>(i)) ? 1 : 0;
    if (p >= 0 && p != q) return -2;
    p = q;
  }
  return p;
}

}  // namespace

Vec SuperFrobeniusAlgebra::product(const Vec& a, const Vec& b) const {
  const int d = basis.max_index();
  Vec out(d + 1);
  for (const auto& [ij, terms] : mult) {
    const Scalar& ai = a[ij.first];
    const Scalar& bj = b[ij.second];
    if (ai.is_zero() || bj.is_zero()) continue;
    for (const auto& [k, c] : terms) out[k] += ai * bj * c;
  }
  return out;
}

Scalar SuperFrobeniusAlgebra::pairing(const Vec& a, const Vec& b) const {
  const int d = basis.max_index();
  Scalar s;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) s += a[i] * b[j] * form[i - 1][j - 1];
  return s;
}

void SuperFrobeniusAlgebra::validate() const {
  const int d = basis.max_index();
  if (basis.has_extra_fermion()) throw std::invalid_argument("frobenius: no extra fermion allowed");
  if (static_cast<int>(unit.size()) != d + 1 || static_cast<int>(form.size()) != d)
    throw std::invalid_argument("frobenius: size mismatch");
  std::vector<Vec> e(d + 1);
  for (int i = 1; i <= d; ++i) e[i] = basis_vector(d, i);
  for (int i = 1; i <= d; ++i) {
    if (product(unit, e[i]) != e[i] || product(e[i], unit) != e[i]) throw std::invalid_argument("frobenius: unit fails");
    for (int j = 1; j <= d; ++j) {
      Vec ij = product(e[i], e[j]), ji = product(e[j], e[i]);
      const int pi = basis.is_odd(i) ? 1 : 0, pj = basis.is_odd(j) ? 1 : 0;
      const int pij = vec_parity(ij, basis);
      if (pij != -1 && pij != ((pi + pj) & 1)) throw std::invalid_argument("frobenius: product does not respect grading");
      for (int k = 1; k <= d; ++k) {
        Scalar s = (pi & pj) ? -ji[k] : ji[k];
        if (ij[k] != s) throw std::invalid_argument("frobenius: product is not supercommutative");
      }
      for (int k = 1; k <= d; ++k)
        if (product(ij, e[k]) != product(e[i], product(e[j], e[k])))
          throw std::invalid_argument("frobenius: product is not associative");
      if (!form[i - 1][j - 1].is_zero() && pi != pj) throw std::invalid_argument("frobenius: form pairs even with odd");
      for (int k = 1; k <= d; ++k)
        if (pairing(ij, e[k]) != pairing(e[i], product(e[j], e[k])))
          throw std::invalid_argument("frobenius: form is not invariant");
    }
  }
  try {
    (void)invert(form);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("frobenius: degenerate form");
  }
}

SuperFrobeniusAlgebra frobenius_even_line() {
  SuperFrobeniusAlgebra a;
  a.basis = GradedBasis::from_labels({Parity::even}, false);
  a.mult[{1, 1}][1] = Scalar(1);
  a.unit = {Scalar(), Scalar(1)};
  a.form = {{Scalar(1)}};
  return a;
}

SuperFrobeniusAlgebra frobenius_grassmann2() {
  // e1 = 1, e2 = eta1 eta2, e3 = eta1, e4 = eta2
  SuperFrobeniusAlgebra a;
  a.basis = GradedBasis::from_labels({Parity::even, Parity::even, Parity::odd, Parity::odd}, false);
  for (int i = 1; i <= 4; ++i) {
    a.mult[{1, i}][i] = Scalar(1);
    if (i != 1) a.mult[{i, 1}][i] = Scalar(1);
  }
  a.mult[{3, 4}][2] = Scalar(1);
  a.mult[{4, 3}][2] = Scalar(-1);
  a.unit = {Scalar(), Scalar(1), Scalar(), Scalar(), Scalar()};
  a.form = Matrix(4, Vec(4));
  // phi(a, b) = eps(ab) with eps(eta1 eta2) = 1
  a.form[0][1] = a.form[1][0] = Scalar(1);
  a.form[2][3] = Scalar(1);
  a.form[3][2] = Scalar(-1);
  return a;
}

SQASTensors frobenius_to_airy(const SuperFrobeniusAlgebra& alg, const Vec& theta_A, const Vec& theta_B,
                              const Vec& theta_C, const std::map<int, Scalar>& D) {
  alg.validate();
  const int d = alg.basis.max_index();
  for (const Vec* th : {&theta_A, &theta_B, &theta_C}) {
    if (static_cast<int>(th->size()) != d + 1) throw std::invalid_argument("frobenius: theta has wrong size");
    if (vec_parity(*th, alg.basis) == 1 || vec_parity(*th, alg.basis) == -2)
      throw std::invalid_argument("frobenius: theta must be even");
  }
  // e^j = sum_l P[j][l] e_l with phi(e_i, e^j) = delta_ij, so P = (Phi^{-1})^T
  Matrix inv;
  try {
    inv = invert(alg.form);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("frobenius: degenerate form");
  }
  std::vector<Vec> e(d + 1), dual(d + 1);
  for (int i = 1; i <= d; ++i) {
    e[i] = basis_vector(d, i);
    dual[i] = Vec(d + 1);
    for (int l = 1; l <= d; ++l) dual[i][l] = inv[l - 1][i - 1];
  }
  auto eps = [&](const Vec& a) { return alg.pairing(alg.unit, a); };
  auto prod3 = [&](const Vec& th, const Vec& a, const Vec& b, const Vec& c) {
    return eps(alg.product(alg.product(alg.product(th, a), b), c));
  };

  SQASTensors t(alg.basis);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        if (j <= k) {
          Scalar a = prod3(theta_A, e[i], e[j], e[k]);
          if (!a.is_zero()) t.set_A({i, j, k}, a);
          Scalar c = prod3(theta_C, e[i], dual[j], dual[k]);
          if (!c.is_zero()) t.set_C({i, j, k}, c);
        }
        Scalar b = prod3(theta_B, e[i], e[j], dual[k]);
        if (!b.is_zero()) t.set_B({i, j, k}, b);
      }
  for (const auto& [i, v] : D) {
    alg.basis.require_label(i);
    if (!v.is_zero()) t.set_D(i, v);
  }
  t.validate();
  return t;
}

}  // namespace sqas
