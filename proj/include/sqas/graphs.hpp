#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sqas/recursion.hpp"
#include "sqas/structure.hpp"

namespace sqas {

// u == v marks a loop.
struct GraphEdge {
  int u = 0;
  int v = 0;
  bool tree = false;
  auto operator<=>(const GraphEdge&) const = default;
  bool operator==(const GraphEdge&) const = default;
};

// Trivalent graph with ordered leaves (leaf 0 is the root) and a spanning tree.
struct DecoratedGraph {
  int genus = 0;
  int vertices = 0;
  std::vector<int> leaf_vertex;
  std::vector<GraphEdge> edges;
  // Vertex permutations fixing every leaf and preserving edges and tree.
  int automorphisms = 1;

  int leaves() const { return static_cast<int>(leaf_vertex.size()); }
  int root_vertex() const { return leaf_vertex.at(0); }
  // Checks valence, connectivity, Betti number, tree and ancestor conditions; throws std::invalid_argument.
  void validate() const;
  // Encoding that is equal for isomorphic graphs (same leaf order).
  std::vector<int> canonical_key() const;
  // Same graph with vertices relabelled into canonical order.
  DecoratedGraph canonical() const;
  int count_automorphisms() const;
};

// Colours on leaves and on non-loop edges; entries for loops are ignored.
struct Colouring {
  std::vector<int> leaves;
  std::vector<int> edges;
};

// Every isomorphism class of G_{g,n+1} once, with its automorphism count.
std::vector<DecoratedGraph> enumerate_graphs(int g, int n_plus_1);

// Recursive weight of one coloured graph.
Scalar graph_weight(const DecoratedGraph& graph, const Colouring& colouring, const SQASTensors& t);

// Sums of weights over colourings, memoized per structure.
class GraphOracle {
 public:
  explicit GraphOracle(SQASTensors t);

  const SQASTensors& structure() const { return *t_; }
  // Colour-summed weight of one graph keyed by (root colour, leaf colours).
  const std::map<Tuple, Scalar>& weights(const DecoratedGraph& graph);
  // sum over G_{g,n+1} of weights / |Aut|, keyed by ordered colour tuples.
  const std::map<Tuple, Scalar>& table(int g, int n_plus_1);
  Scalar sum(int g, int root, const Tuple& leaves);

 private:
  std::shared_ptr<const SQASTensors> t_;
  std::map<std::vector<int>, std::map<Tuple, Scalar>> memo_;
  std::map<std::pair<int, int>, std::map<Tuple, Scalar>> tables_;
  std::map<int, std::vector<std::pair<Tuple, Scalar>>> b_by_upper_;  // b -> ((i, a), B_{ia}^b)
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> c_by_pair_;  // (b, c) -> (i, C_i^{bc})
};

Scalar graph_sum(int g, int root, const Tuple& leaves, const SQASTensors& t);

// Compares the oracle with the recursion for all (g, n) with 1 <= 2g+n-2 <= max_level.
ConstraintReport compare_oracle(const SQASTensors& t, int max_level);
// Same comparison against canonical (sorted) table entries, e.g. a loaded table document.
ConstraintReport compare_oracle(const SQASTensors& t, const std::map<TableKey, Scalar>& values, int max_level);

}  // namespace sqas
