#pragma once

#include <functional>
#include <vector>

#include "sqas/scalar.hpp"

namespace sqas::testing {

// Counts vertex-labelled trivalent graphs on V = 2g - 1 + n vertices with n + 1 labelled leaves,
// a spanning tree, and every non-tree edge joining a vertex to one of its tree ancestors
// (the tree is rooted at the vertex of leaf 0). Edges form a multiset, so the sum of
// 1 / |Aut| over isomorphism classes is this count divided by V!.
inline Rational labelled_graph_mass(int g, int n_plus_1) {
  const int n = n_plus_1 - 1;
  const int V = 2 * g - 1 + n;
  if (V < 1) return Rational(0);
  struct E {
    int u, v;
    bool tree;
  };
  std::vector<int> leaf(n_plus_1), deficit;
  std::vector<E> edges;
  long count = 0;

  auto accept = [&]() {
    if (static_cast<int>(edges.size()) - V + 1 != g) return false;
    std::vector<std::vector<int>> adj(V);
    int tree_edges = 0;
    for (const E& e : edges) {
      if (!e.tree) continue;
      if (e.u == e.v) return false;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
      ++tree_edges;
    }
    if (tree_edges != V - 1) return false;
    std::vector<int> parent(V, -2);
    std::vector<int> order{leaf[0]};
    parent[leaf[0]] = -1;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int w : adj[order[k]])
        if (parent[w] == -2) {
          parent[w] = order[k];
          order.push_back(w);
        }
    if (static_cast<int>(order.size()) != V) return false;
    auto above = [&](int a, int b) {
      for (int x = b; x != -1; x = parent[x])
        if (x == a) return true;
      return false;
    };
    for (const E& e : edges)
      if (!e.tree && !above(e.u, e.v) && !above(e.v, e.u)) return false;
    return true;
  };

  // Fills the remaining valence with edges in nondecreasing (u, v, tree) order.
  std::function<void(int, int, int)> fill = [&](int u0, int v0, int t0) {
    int u = 0;
    while (u < V && deficit[u] == 0) ++u;
    if (u == V) {
      if (accept()) ++count;
      return;
    }
    for (int v = u; v < V; ++v)
      for (int tr = 0; tr < 2; ++tr) {
        if (u < u0 || (u == u0 && (v < v0 || (v == v0 && tr < t0)))) continue;
        if (u == v && deficit[u] < 2) continue;
        if (u != v && deficit[v] == 0) continue;
        --deficit[u];
        --deficit[v];
        edges.push_back({u, v, tr == 1});
        fill(u, v, tr);
        edges.pop_back();
        ++deficit[u];
        ++deficit[v];
      }
  };

  std::function<void(int)> place = [&](int k) {
    if (k == n_plus_1) {
      deficit.assign(V, 3);
      for (int x : leaf) --deficit[x];
      for (int d : deficit)
        if (d < 0) return;
      fill(0, 0, 0);
      return;
    }
    for (int x = 0; x < V; ++x) {
      leaf[k] = x;
      place(k + 1);
    }
  };
  place(0);

  Rational fact(1);
  for (int k = 2; k <= V; ++k) fact *= k;
  return Rational(count) / fact;
}

}  // namespace sqas::testing
