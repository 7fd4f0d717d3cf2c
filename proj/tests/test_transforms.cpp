#include <catch_amalgamated.hpp>

#include "sqas/catalog.hpp"
#include "sqas/linalg.hpp"
#include "sqas/recursion.hpp"
#include "sqas/transforms.hpp"
#include "support/susy_example.hpp"

using namespace sqas;
using testing::Taylor;

namespace {

using testing::add_taylor;
using testing::as_series;
using testing::closed_form_fcl;
using testing::closed_form_fprime_over_hbar;
using testing::in_span;
using testing::kOdd;
using testing::susy_gauge;

std::vector<std::string> finite_ids() {
  std::vector<std::string> ids;
  for (const CatalogInfo& c : catalog_list())
    if (!c.infinite) ids.push_back(c.id);
  return ids;
}

}  // namespace

TEST_CASE("zero gauge is the identity") {
  const SQASTensors t = instantiate("osp(1|2)");
  const SQASTensors u = gauge_transform_structure(t, GaugeData{});
  CHECK(u.A == t.A);
  CHECK(u.B == t.B);
  CHECK(u.C == t.C);
  FreeEnergyTable table = compute_free_energy(t, 4);
  CHECK(as_series(gauge_transform_Z(table, GaugeData{}, 4)) == partition_series(table, 4));
}

TEST_CASE("gauged (1|2) operators are first order and match the printed forms") {
  const SQASTensors t = instantiate("1|2-susy", {{"D", Scalar(1)}});
  const SQASTensors u = gauge_transform_structure(t, susy_gauge());
  Operator L, G1, G2;
  L.add(Scalar(1), 1, {}, {1}, kOdd).add(Scalar(-1), 0, {1, 1}, {}, kOdd).add(Scalar(-2), 1, {1}, {1}, kOdd);
  L.add(Scalar(-1), 1, {}, {}, kOdd).add(Scalar(-1), 0, {2, 3}, {}, kOdd);
  L.add(Scalar(-1), 1, {2}, {2}, kOdd).add(Scalar(-1), 1, {3}, {3}, kOdd);
  G1.add(Scalar(1), 1, {}, {2}, kOdd).add(Scalar(-1), 0, {1, 3}, {}, kOdd).add(Scalar(-2), 1, {3}, {1}, kOdd);
  G2.add(Scalar(1), 1, {}, {3}, kOdd).add(Scalar(1), 0, {1, 2}, {}, kOdd).add(Scalar(2), 1, {2}, {1}, kOdd);
  CHECK(to_operator(u, 1) == L);
  CHECK(to_operator(u, 2) == G1);
  CHECK(to_operator(u, 3) == G2);
  CHECK(u.C.empty());
  CHECK(verify_airy(u).passed);
  CHECK(effective_f(u) == effective_f(t));
}

TEST_CASE("quadratic gauge on a one-variable structure matches direct conjugation") {
  // L = hbar d - x^2/2 and s = d^2/2 send x to x + hbar d.
  SQASTensors t(GradedBasis::from_labels({Parity::even}, false));
  t.set_A({1, 1, 1}, Scalar(1));
  GaugeData s;
  s.terms[{1, 1}] = Scalar(1);
  const OddMask odd{0, 0};
  Operator expect;
  expect.add(Scalar(1), 1, {}, {1}, odd).add(Scalar::fraction(-1, 2), 0, {1, 1}, {}, odd);
  expect.add(Scalar(-1), 1, {1}, {1}, odd).add(Scalar::fraction(-1, 2), 1, {}, {}, odd);
  expect.add(Scalar::fraction(-1, 2), 2, {}, {1, 1}, odd);
  CHECK(gauge_transform_operators(t, s).at(1) == expect);
  // linear structures commute with the gauge
  SQASTensors lin(GradedBasis::from_labels({Parity::even, Parity::odd, Parity::odd}, false));
  const SQASTensors same = gauge_transform_structure(lin, susy_gauge());
  CHECK(same.A.empty());
  CHECK(same.B.empty());
  CHECK(same.C.empty());
}

TEST_CASE("higher order gauges leave the quadratic class") {
  const SQASTensors t = instantiate("1|2-susy");
  GaugeData s;
  s.terms[{1, 1, 1}] = Scalar(1);
  CHECK(s.order() == 3);
  CHECK_THROWS_AS(gauge_transform_structure(t, s), UnsupportedError);
  FreeEnergyTable table = compute_free_energy(t, 4);
  const auto z = gauge_transform_Z(table, s, 4);
  CHECK(as_series(z).coeff(0, {}) == Scalar(1));
  CHECK(as_series(z).truncated(4) == as_series(z));
  GaugeData odd;
  odd.terms[{1, 2}] = Scalar(1);
  CHECK_THROWS_AS(odd.validate(t.basis), std::invalid_argument);
}

TEST_CASE("gauge covariance of the free energy") {
  const SQASTensors t = instantiate("1|2-susy");
  const GaugeData s = susy_gauge();
  FreeEnergyTable table = compute_free_energy(t, 5);
  FreeEnergyTable gauged = compute_free_energy(gauge_transform_structure(t, s), 5);
  const Series Zp = gauge_transform_series(partition_series(table, 5), s, t.basis, 5);
  CHECK(log_series(Zp, kOdd, 5) == free_energy_series(gauged, 5).shifted(-1));
}

TEST_CASE("gauged partition function matches the closed form F'") {
  const SQASTensors t = instantiate("1|2-susy", {{"D", Scalar(1)}});
  FreeEnergyTable table = compute_free_energy(t, 6);
  const Series expect = exp_series(closed_form_fprime_over_hbar(9), kOdd, 6);
  CHECK(as_series(gauge_transform_Z(table, susy_gauge(), 6)) == expect);
}

TEST_CASE("classical limit of the (1|2) example") {
  const ClassicalStructure cl = classical_limit(instantiate("1|2-susy"));
  // symbols: x = 2, y_x = 3, theta1 = 4, y_1 = 5, theta2 = 6, y_2 = 7
  const ClassicalPoly L{{{3}, Scalar(1)}, {{2, 2}, Scalar(-1)}, {{4, 6}, Scalar(-1)}, {{3, 3}, Scalar(1)}, {{5, 7}, Scalar(1)}};
  CHECK(cl.hamiltonians.at(1) == L);
  CHECK(check_poisson(cl).passed);
  const ClassicalStructure b = bosonic_reduction(cl);
  REQUIRE(b.hamiltonians.size() == 1);
  CHECK(b.hamiltonians.at(1) == ClassicalPoly{{{3}, Scalar(1)}, {{2, 2}, Scalar(-1)}, {{3, 3}, Scalar(1)}});
  CHECK(check_poisson(b).passed);
}

TEST_CASE("classical free energy matches the closed form and solves the Lagrangian condition") {
  const SQASTensors t = instantiate("1|2-susy");
  FreeEnergyTable table = compute_free_energy(t, 5);
  CHECK(classical_free_energy(table, 7) == closed_form_fcl(9).truncated(7));
  CHECK(check_lagrangian(classical_limit(t), table, 7).passed);
  FreeEnergyTable osp = compute_free_energy(instantiate("osp(1|2)"), 4);
  CHECK(check_lagrangian(classical_limit(osp.structure()), osp, 4).passed);
  SQASTensors zero(GradedBasis::from_labels({Parity::even, Parity::odd}, false));
  FreeEnergyTable empty(zero);
  CHECK(classical_free_energy(empty, 5).is_zero());
  CHECK(check_lagrangian(classical_limit(zero), empty, 5).passed);
  for (const auto& [i, h] : classical_limit(zero).hamiltonians) CHECK(h == ClassicalPoly{{{2 * i + 1}, Scalar(1)}});
}

TEST_CASE("a wrong free energy fails the Lagrangian condition") {
  const SQASTensors t = instantiate("1|2-susy");
  FreeEnergyTable other = compute_free_energy(instantiate("1|2-susy", {{"D", Scalar(3)}}), 4);
  CHECK(check_lagrangian(classical_limit(t), other, 4).passed);  // D is invisible classically
  SQASTensors u = t;
  u.set_A({1, 1, 1}, Scalar(4));
  FreeEnergyTable wrong = compute_free_energy(u, 4);
  const ConstraintReport r = check_lagrangian(classical_limit(t), wrong, 4);
  CHECK_FALSE(r.passed);
  CHECK(r.count("lagrangian") > 0);
}

TEST_CASE("bosonic reduction of the (2|1) example") {
  const ClassicalStructure b = bosonic_reduction(classical_limit(instantiate("2|1-dilatation")));
  CHECK(b.hamiltonians.size() == 2);
  CHECK(check_poisson(b).passed);
  CHECK_NOTHROW(b.validate());
  SQASTensors bos(GradedBasis::from_labels({Parity::even, Parity::even}, false));
  bos.set_A({1, 1, 1}, Scalar(1));
  bos.set_A({2, 2, 2}, Scalar(2));
  const ClassicalStructure cl = classical_limit(bos);
  CHECK(bosonic_reduction(cl).hamiltonians == cl.hamiltonians);
}

TEST_CASE("Weyl quantization examples") {
  // H of the worked example: -hbar^2/4 d_q^2 + hbar^2/4 d_k1 d_k2
  const SQASTensors w = weyl_quantize(classical_limit(instantiate("worked-example")));
  const Operator H = to_operator(w, 1);
  CHECK(H.coeff(OpKey{2, {}, {1, 1}}) == Scalar::fraction(-1, 4));
  CHECK(H.coeff(OpKey{2, {}, {2, 3}}) == Scalar::fraction(1, 4));
  // y - x^2/2 - y^2/2 and y + x y: the mixed term picks up hbar/2
  ClassicalStructure cl;
  cl.basis = GradedBasis::from_labels({Parity::even}, false);
  cl.hamiltonians[1] = {{{3}, Scalar(1)}, {{2, 2}, Scalar::fraction(-1, 2)}, {{3, 3}, Scalar::fraction(-1, 2)}};
  const OddMask odd{0, 0};
  Operator expect;
  expect.add(Scalar(1), 1, {}, {1}, odd).add(Scalar::fraction(-1, 2), 0, {1, 1}, {}, odd).add(Scalar::fraction(-1, 2), 2, {}, {1, 1}, odd);
  CHECK(quantize(cl, Ordering::weyl).at(1) == expect);
  cl.hamiltonians[1] = {{{3}, Scalar(1)}, {{2, 3}, Scalar(1)}};
  Operator mixed;
  mixed.add(Scalar(1), 1, {}, {1}, odd).add(Scalar(1), 1, {1}, {1}, odd).add(Scalar::fraction(1, 2), 1, {}, {}, odd);
  CHECK(quantize(cl, Ordering::weyl).at(1) == mixed);
  Operator normal;
  normal.add(Scalar(1), 1, {}, {1}, odd).add(Scalar(1), 1, {1}, {1}, odd);
  CHECK(quantize(cl, Ordering::normal).at(1) == normal);
}

TEST_CASE("Weyl quantization round trip on finite entries") {
  for (const std::string& id : finite_ids()) {
    INFO(id);
    const SQASTensors t = instantiate(id);
    const ClassicalStructure cl = classical_limit(t);
    CHECK(check_poisson(cl).passed);
    const SQASTensors w = weyl_quantize(cl);
    CHECK(verify_airy(w).passed);
    CHECK(w.A == t.A);
    CHECK(w.B == t.B);
    CHECK(w.C == t.C);
    CHECK(classical_limit(w).hamiltonians == cl.hamiltonians);
    const CocycleResult weyl = cocycle(cl, Ordering::weyl);
    CHECK(weyl.constant);
    CHECK(weyl.zeta.empty());
    const CocycleResult normal = cocycle(cl, Ordering::normal);
    CHECK(normal.constant);
    CHECK(normal.cocycle_condition);
    CHECK(normal.solvable);
    CHECK(verify_airy(normal_quantize(cl)).passed);
    // D of the catalog entry and of the Weyl quantization differ by an admissible shift
    std::map<int, Scalar> diff;
    for (int i = 1; i <= t.basis.max_index(); ++i) diff[i] = t.get_D(i) - w.get_D(i);
    CHECK(in_span(diff, normal.ambiguity, t.basis.max_index()));
  }
}

TEST_CASE("D ambiguity") {
  const CocycleResult osp = cocycle(classical_limit(instantiate("osp(1|2)")));
  CHECK(osp.ambiguity.empty());
  const ClassicalStructure ab = classical_limit(instantiate("1|1-abelian-1"));
  const CocycleResult z = cocycle(ab);
  CHECK(z.zeta.empty());
  CHECK(z.ambiguity.size() == 1);  // the whole dual of the even part
  CHECK(d_ambiguity(ab.basis, ab.f).size() == 1);
}
