// One PASS/FAIL line per acceptance criterion. All comparisons are exact; a criterion also fails
// when it exceeds its runtime limit.
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqas/catalog.hpp"
#include "sqas/graphs.hpp"
#include "sqas/recursion.hpp"
#include "sqas/structure.hpp"
#include "sqas/transforms.hpp"
#include "support/families.hpp"
#include "support/lz_solver.hpp"
#include "support/susy_example.hpp"

using namespace sqas;
using namespace sqas::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects failures; keeps the first few for the report line.
struct Checker {
  int checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  Outcome outcome() const {
    Outcome o;
    o.passed = failures.empty();
    std::ostringstream ss;
    ss << checked << " checks";
    if (!failures.empty()) {
      ss << ", " << failures.size() << " failed:";
      for (std::size_t k = 0; k < failures.size() && k < 6; ++k) ss << " [" << failures[k] << "]";
      if (failures.size() > 6) ss << " ...";
    }
    o.detail = ss.str();
    return o;
  }
};

std::vector<std::string> finite_ids() {
  std::vector<std::string> ids;
  for (const CatalogInfo& c : catalog_list())
    if (!c.infinite) ids.push_back(c.id);
  return ids;
}

Outcome constraint_suite() {
  Checker c;
  int structures = 0;
  for (const std::string& id : finite_ids()) {
    const ConstraintReport r = verify_airy(instantiate(id));
    c.expect(r.passed && r.violations.empty(), id);
    ++structures;
  }
  for (const FamilyCase& f : family_grid()) {
    const SQASTensors t = instantiate(f.id, f.params, certified_truncation(f.id, f.params, 4));
    c.expect(verify_airy(t).passed, describe(f));
    ++structures;
  }
  c.expect(structures >= 12, "fewer than 12 structures");
  Outcome o = c.outcome();
  o.detail = std::to_string(structures) + " structures, " + o.detail;
  return o;
}

Outcome susy_coefficients() {
  Checker c;
  FreeEnergyTable table = compute_free_energy(instantiate("1|2-susy"), 4);
  const Series F = free_energy_series(table, 4);
  struct Term {
    const char* name;
    int g;
    Tuple mono;
    Scalar value;
  };
  // F = sum hbar^g F_g with x = 1, theta1 = 2, theta2 = 3
  const std::vector<Term> printed{
      {"x^3", 0, {1, 1, 1}, Scalar::fraction(1, 3)},
      {"x^5", 0, {1, 1, 1, 1, 1}, Scalar::fraction(-1, 5)},
      {"x theta1 theta2", 0, {1, 2, 3}, Scalar(1)},
      {"x^3 theta1 theta2", 0, {1, 1, 1, 2, 3}, Scalar(-1)},
      {"hbar x^2", 1, {1, 1}, Scalar(-1)},
      {"hbar theta1 theta2", 1, {2, 3}, Scalar(-1)},
      {"hbar^2 x", 2, {1}, Scalar(1)},
  };
  for (const Term& t : printed) {
    const Scalar got = F.coeff(t.g, t.mono);
    c.expect(got == t.value, std::string(t.name) + ": expected " + t.value.to_string() + ", got " + got.to_string());
  }
  return c.outcome();
}

Outcome extra_fermion_example() {
  Checker c;
  FreeEnergyTable table = compute_free_energy(instantiate("2|1-extra-fermion"), 6);
  const std::map<TableKey, Scalar> expect{{TableKey{0, {0, 2, 3}}, Scalar(1)}};
  c.expect(table.entries() == expect, "free energy table");
  // Z = 1 + x2 theta0 theta1 / hbar since theta0 theta1 squares to zero
  Series Z;
  Z.add(SeriesKey{0, {}}, Scalar(1));
  Z.add(SeriesKey{-1, {0, 2, 3}}, Scalar(1));
  c.expect(partition_series(table, 6) == Z, "partition function");
  return c.outcome();
}

Outcome classical_closed_form() {
  Checker c;
  const SQASTensors t = instantiate("1|2-susy");
  FreeEnergyTable table = compute_free_energy(t, 5);
  c.expect(classical_free_energy(table, 7) == closed_form_fcl(9).truncated(7), "F_cl Taylor coefficients");
  const ConstraintReport r = check_lagrangian(classical_limit(t), table, 7);
  c.expect(r.passed, "Lagrangian residual, " + std::to_string(r.violations.size()) + " nonzero");
  return c.outcome();
}

Outcome gauge_identity() {
  Checker c;
  // with D = 1 the gauged partition function is exp(F'/hbar)
  FreeEnergyTable table = compute_free_energy(instantiate("1|2-susy", {{"D", Scalar(1)}}), 6);
  const Series expect = exp_series(closed_form_fprime_over_hbar(9), kOdd, 6);
  c.expect(as_series(gauge_transform_Z(table, susy_gauge(), 6)) == expect, "D = 1");
  // the hbar^{-1} part of F' does not see D
  FreeEnergyTable plain = compute_free_energy(instantiate("1|2-susy"), 6);
  const Series Fp = log_series(as_series(gauge_transform_Z(plain, susy_gauge(), 6)), kOdd, 6);
  Series classical, expect_classical;
  for (const auto& [k, v] : Fp.terms())
    if (k.hbar == -1) classical.add(k, v);
  const Series cf = closed_form_fprime_over_hbar(9).truncated(6);
  for (const auto& [k, v] : cf.terms())
    if (k.hbar == -1) expect_classical.add(k, v);
  c.expect(classical == expect_classical, "D = 0, classical part");
  return c.outcome();
}

Outcome z2_symmetry() {
  Checker c;
  for (const std::string& id : finite_ids()) {
    FreeEnergyTable table = compute_free_energy(instantiate(id), 8);
    c.expect(check_z2_symmetry(table, 8).passed, id);
  }
  for (const FamilyCase& f : family_grid()) {
    FreeEnergyTable table = compute_free_energy(instantiate(f.id, f.params, certified_truncation(f.id, f.params, 5)), 5);
    c.expect(check_z2_symmetry(table, 5).passed, describe(f));
  }
  return c.outcome();
}

Outcome graph_oracle() {
  Checker c;
  for (const std::string& id : finite_ids()) {
    const SQASTensors t = instantiate(id);
    if (t.basis.has_extra_fermion()) continue;
    c.expect(compare_oracle(t, 4).passed, id);
  }
  for (const FamilyCase& f : family_grid()) {
    const SQASTensors t = instantiate(f.id, f.params, certified_truncation(f.id, f.params, 4));
    if (t.basis.has_extra_fermion()) continue;
    c.expect(compare_oracle(t, 4).passed, describe(f));
  }
  return c.outcome();
}

Outcome independent_solve() {
  Checker c;
  const std::vector<Params> cases{
      {{"N", Scalar(-1)}},
      {{"N", Scalar(0)}},
      {{"N", Scalar(0)}, {"D1", Scalar::fraction(1, 16)}},
  };
  for (const Params& p : cases) {
    const std::string name = describe(FamilyCase{"twisted-boson", p});
    const SQASTensors t = instantiate("twisted-boson", p, certified_truncation("twisted-boson", p, 4));
    const LZSolution sol = solve_partition(t, 4);
    c.expect(sol.consistent, name + " solve");
    FreeEnergyTable table = compute_free_energy(t, 4);
    const Series F = log_series(sol.Z, t.basis.odd_mask(), 4).shifted(1);
    c.expect(F == free_energy_series(table, 4), name);
  }
  return c.outcome();
}

Outcome weyl_round_trip() {
  Checker c;
  for (const std::string id : {"osp(1|2)", "worked-example"}) {
    const SQASTensors t = instantiate(id);
    const ClassicalStructure cl = classical_limit(t);
    const SQASTensors w = weyl_quantize(cl);
    c.expect(w.A == t.A && w.B == t.B && w.C == t.C, id + " tensors");
    const CocycleResult normal = cocycle(cl, Ordering::normal);
    std::map<int, Scalar> diff;
    for (int i = 1; i <= t.basis.max_index(); ++i) diff[i] = t.get_D(i) - w.get_D(i);
    c.expect(in_span(diff, normal.ambiguity, t.basis.max_index()), id + " D up to the ambiguity");
  }
  for (const std::string& id : finite_ids()) {
    const CocycleResult weyl = cocycle(classical_limit(instantiate(id)), Ordering::weyl);
    c.expect(weyl.constant && weyl.zeta.empty(), id + " Weyl cocycle");
  }
  return c.outcome();
}

Outcome truncation_stability() {
  Checker c;
  for (const FamilyCase& f : family_grid()) {
    const int T = certified_truncation(f.id, f.params, 4);
    FreeEnergyTable a = compute_free_energy(instantiate(f.id, f.params, T), 4);
    FreeEnergyTable b = compute_free_energy(instantiate(f.id, f.params, 2 * T), 4);
    c.expect(a.entries() == b.entries(), describe(f) + " truncation " + std::to_string(T));
  }
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "constraint suite", 10, constraint_suite},
      {2, "(1|2) free energy coefficients", 1, susy_coefficients},
      {3, "(2|1) extra fermion example", 1, extra_fermion_example},
      {4, "classical closed form", 1, classical_closed_form},
      {5, "gauge identity", 5, gauge_identity},
      {6, "Z2 symmetry", 120, z2_symmetry},
      {7, "graph oracle", 60, graph_oracle},
      {8, "independent solve", 60, independent_solve},
      {9, "Weyl round trip", 5, weyl_round_trip},
      {10, "truncation stability", 120, truncation_stability},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit_seconds;
    const bool ok = o.passed && in_time;
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << cr.number << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s of " << cr.limit_seconds << " s"
              << (in_time ? "" : ", over time") << ") " << o.detail << "\n";
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
