#include <catch_amalgamated.hpp>

#include <set>

#include "sqas/catalog.hpp"
#include "sqas/graphs.hpp"
#include "sqas/recursion.hpp"
#include "support/graph_count.hpp"

using namespace sqas;

TEST_CASE("small graph sets") {
  CHECK(enumerate_graphs(0, 1).empty());
  CHECK(enumerate_graphs(0, 2).empty());
  const auto g03 = enumerate_graphs(0, 3);
  REQUIRE(g03.size() == 1);
  CHECK(g03[0].vertices == 1);
  CHECK(g03[0].edges.empty());
  const auto g11 = enumerate_graphs(1, 1);
  REQUIRE(g11.size() == 1);
  REQUIRE(g11[0].edges.size() == 1);
  CHECK(g11[0].edges[0].u == g11[0].edges[0].v);
  CHECK_THROWS_AS(enumerate_graphs(-1, 3), std::invalid_argument);
}

TEST_CASE("enumeration gives valid, pairwise non-isomorphic graphs") {
  for (int g = 0; g <= 2; ++g)
    for (int m = 1; 2 * g + m - 3 <= 4; ++m) {
      if (2 * g + m - 3 < 0) continue;
      INFO("g=" << g << " leaves=" << m);
      std::set<std::vector<int>> keys;
      for (const DecoratedGraph& G : enumerate_graphs(g, m)) {
        CHECK_NOTHROW(G.validate());
        CHECK(G.genus == g);
        CHECK(G.leaves() == m);
        CHECK(G.count_automorphisms() == G.automorphisms);
        CHECK(keys.insert(G.canonical_key()).second);
        CHECK(G.canonical().canonical_key() == G.canonical_key());
      }
    }
}

TEST_CASE("automorphism mass matches brute-force labelled generation") {
  for (int g = 0; g <= 2; ++g)
    for (int m = 1; 2 * g + m - 3 <= 4; ++m) {
      if (2 * g + m - 3 < 0) continue;
      INFO("g=" << g << " leaves=" << m);
      Rational mass(0);
      for (const DecoratedGraph& G : enumerate_graphs(g, m)) mass += Rational(1) / Rational(G.automorphisms);
      CHECK(mass == testing::labelled_graph_mass(g, m));
      CHECK(mass > 0);
    }
}

TEST_CASE("validation rejects broken graphs") {
  DecoratedGraph G = enumerate_graphs(1, 2)[0];
  DecoratedGraph bad = G;
  bad.edges.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = G;
  for (GraphEdge& e : bad.edges) e.tree = false;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = G;
  bad.genus = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("base weights are A and D") {
  const SQASTensors t = instantiate("worked-example");
  const DecoratedGraph g03 = enumerate_graphs(0, 3)[0];
  for (const auto& [k, v] : t.A.expanded(t.basis)) CHECK(graph_weight(g03, Colouring{k, {}}, t) == v);
  CHECK(graph_weight(g03, Colouring{{2, 2, 2}, {}}, t) == Scalar());
  SQASTensors d = t;
  d.set_D(1, Scalar::fraction(3, 7));
  const DecoratedGraph g11 = enumerate_graphs(1, 1)[0];
  CHECK(graph_weight(g11, Colouring{{1}, {0}}, d) == Scalar::fraction(3, 7));
  CHECK(graph_sum(1, 1, {}, d) == Scalar::fraction(3, 7));
}

TEST_CASE("graph sums match the recursion") {
  const SQASTensors t = instantiate("1|2-susy");
  FreeEnergyTable table = compute_free_energy(t, 3);
  CHECK(graph_sum(0, 1, {1, 1, 1, 1}, t) == Scalar(-24));
  CHECK(graph_sum(0, 2, {1, 3}, t) == table.get(0, {2, 1, 3}));
  CHECK(graph_sum(1, 3, {2}, t) == table.get(1, {3, 2}));
  for (const CatalogInfo& c : catalog_list()) {
    if (c.infinite) continue;
    const SQASTensors s = instantiate(c.id);
    if (s.basis.has_extra_fermion()) continue;
    INFO(c.id);
    CHECK(compare_oracle(s, 3).passed);
  }
  for (const std::string id : {"twisted-boson", "sv-untwisted"}) {
    INFO(id);
    CHECK(compare_oracle(instantiate(id, {{"N", Scalar(0)}}, 6), 3).passed);
  }
}

TEST_CASE("without C there are no loops") {
  SQASTensors t = instantiate("worked-example");
  t.C = SparseGradedTensor(3, {{1, 2}});
  t.D.clear();
  GraphOracle oracle(t);
  for (int g = 1; g <= 2; ++g)
    for (int m = 1; 2 * g + m - 2 <= 3; ++m)
      for (const auto& [k, v] : oracle.table(g, m)) CHECK(v.is_zero());
}

TEST_CASE("a perturbed table is caught") {
  const SQASTensors t = instantiate("1|2-susy");
  FreeEnergyTable table = compute_free_energy(t, 3);
  std::map<TableKey, Scalar> values = table.entries();
  CHECK(compare_oracle(t, values, 3).passed);
  values[TableKey{0, {1, 1, 1}}] += Scalar(1);
  const ConstraintReport r = compare_oracle(t, values, 3);
  CHECK_FALSE(r.passed);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].indices == Tuple{0, 1, 1, 1});
}

TEST_CASE("the extra fermion is unsupported") {
  for (const std::string id : {"osp(1|2)", "2|1-extra-fermion"}) {
    const SQASTensors t = instantiate(id);
    CHECK_THROWS_AS(compare_oracle(t, 2), UnsupportedError);
    CHECK_THROWS_AS(GraphOracle(t), UnsupportedError);
  }
}
