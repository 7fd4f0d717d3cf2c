#include "sqas/graphs.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "sqas/recursion.hpp"

namespace sqas {

namespace {

enum class Case { base03, base11, one, one_prime, two };

// Leaf j of a part is old leaf src[j] when src[j] >= 0, else the root side of old edge -src[j]-1.
struct Part {
  DecoratedGraph graph;
  std::vector<int> leaf_src;
  std::vector<int> edge_src;
};

struct Split {
  Case kind = Case::base03;
  int k = 0;  // case I: position of the leaf at the root vertex
  int e1 = -1, e2 = -1;  // case I': tree, other; case II: first, second
  std::vector<int> pos1;  // case II: leaf positions (1-based) going to the first part
  Part p1, p2;
};

int other_end(const GraphEdge& e, int r) { return e.u == r ? e.v : e.u; }

Part extract(const DecoratedGraph& G, int r, const std::vector<char>& keep, std::vector<int> leaf_src, int genus) {
  Part p;
  std::vector<int> map(G.vertices, -1);
  int nv = 0;
  for (int v = 0; v < G.vertices; ++v)
    if (keep[v]) map[v] = nv++;
  p.graph.genus = genus;
  p.graph.vertices = nv;
  for (int s : leaf_src) {
    int v = s >= 0 ? G.leaf_vertex[s] : other_end(G.edges[-s - 1], r);
    p.graph.leaf_vertex.push_back(map[v]);
  }
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    const GraphEdge& ed = G.edges[e];
    if (ed.u == r || ed.v == r || !keep[ed.u]) continue;
    GraphEdge ne{std::min(map[ed.u], map[ed.v]), std::max(map[ed.u], map[ed.v]), ed.tree};
    p.graph.edges.push_back(ne);
    p.edge_src.push_back(static_cast<int>(e));
  }
  p.leaf_src = std::move(leaf_src);
  return p;
}

Split decompose(const DecoratedGraph& G) {
  const int r = G.root_vertex();
  const int n = G.leaves() - 1;
  std::vector<int> at_leaves, at_edges;
  bool loop = false;
  for (int l = 1; l <= n; ++l)
    if (G.leaf_vertex[l] == r) at_leaves.push_back(l);
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    const GraphEdge& ed = G.edges[e];
    if (ed.u == r && ed.v == r) loop = true;
    else if (ed.u == r || ed.v == r) at_edges.push_back(static_cast<int>(e));
  }
  Split s;
  if (loop) {
    s.kind = Case::base11;
    return s;
  }
  if (at_leaves.size() == 2) {
    s.kind = Case::base03;
    return s;
  }
  std::vector<char> keep(G.vertices, 1);
  keep[r] = 0;
  if (at_leaves.size() == 1) {
    s.kind = Case::one;
    s.k = at_leaves[0];
    s.e1 = at_edges.at(0);
    std::vector<int> src{-s.e1 - 1};
    for (int l = 1; l <= n; ++l)
      if (l != s.k) src.push_back(l);
    s.p1 = extract(G, r, keep, std::move(src), G.genus);
    return s;
  }
  if (at_edges.size() != 2) throw std::invalid_argument("graph: root vertex is not trivalent");
  const int ea = at_edges[0], eb = at_edges[1];
  if (G.edges[ea].tree != G.edges[eb].tree) {
    s.kind = Case::one_prime;
    s.e1 = G.edges[ea].tree ? ea : eb;
    s.e2 = G.edges[ea].tree ? eb : ea;
    std::vector<int> src{-s.e1 - 1, -s.e2 - 1};
    for (int l = 1; l <= n; ++l) src.push_back(l);
    s.p1 = extract(G, r, keep, std::move(src), G.genus - 1);
    return s;
  }
  if (!G.edges[ea].tree) throw std::invalid_argument("graph: root vertex has no tree edge");
  s.kind = Case::two;
  s.e1 = ea;
  s.e2 = eb;
  // component of the first child in the graph without the root vertex
  std::vector<char> comp(G.vertices, 0);
  std::vector<int> stack{other_end(G.edges[ea], r)};
  comp[stack[0]] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const GraphEdge& ed : G.edges) {
      if (ed.u == r || ed.v == r) continue;
      int w = ed.u == v ? ed.v : (ed.v == v ? ed.u : -1);
      if (w >= 0 && !comp[w]) {
        comp[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<char> rest(G.vertices, 0);
  int v1 = 0, e1 = 0, v2 = 0, e2 = 0;
  for (int v = 0; v < G.vertices; ++v) {
    if (v == r) continue;
    rest[v] = !comp[v];
    (comp[v] ? v1 : v2)++;
  }
  for (const GraphEdge& ed : G.edges) {
    if (ed.u == r || ed.v == r) continue;
    (comp[ed.u] ? e1 : e2)++;
  }
  std::vector<int> src1{-ea - 1}, src2{-eb - 1};
  for (int l = 1; l <= n; ++l) {
    if (comp[G.leaf_vertex[l]]) {
      src1.push_back(l);
      s.pos1.push_back(l);
    } else {
      src2.push_back(l);
    }
  }
  s.p1 = extract(G, r, comp, std::move(src1), e1 - v1 + 1);
  s.p2 = extract(G, r, rest, std::move(src2), e2 - v2 + 1);
  return s;
}

Colouring restrict(const Part& p, const Colouring& c) {
  Colouring out;
  for (int s : p.leaf_src) out.leaves.push_back(s >= 0 ? c.leaves[s] : c.edges[-s - 1]);
  for (int e : p.edge_src) out.edges.push_back(c.edges[e]);
  return out;
}

// Sign of the unshuffle of positions 1..n into (pos1, rest).
int unshuffle_sign(const Tuple& colours, const std::vector<int>& pos1, const OddMask& odd) {
  std::vector<char> in1(colours.size() + 1, 0);
  for (int p : pos1) in1[p] = 1;
  int odd_in_2 = 0, inv = 0;
  for (std::size_t q = 1; q <= colours.size(); ++q) {
    if (!odd[colours[q - 1]]) continue;
    if (in1[q]) inv += odd_in_2;
    else ++odd_in_2;
  }
  return (inv & 1) ? -1 : 1;
}

void require_no_extra(const SQASTensors& t) {
  if (t.basis.has_extra_fermion())
    throw UnsupportedError("graph oracle: structures with the extra fermionic variable are not supported");
}

std::vector<int> encode(const DecoratedGraph& G, const std::vector<int>& perm) {
  std::vector<int> key{G.genus, G.vertices, G.leaves()};
  for (int v : G.leaf_vertex) key.push_back(perm[v]);
  std::vector<GraphEdge> es;
  es.reserve(G.edges.size());
  for (const GraphEdge& e : G.edges) {
    int a = perm[e.u], b = perm[e.v];
    es.push_back({std::min(a, b), std::max(a, b), e.tree});
  }
  std::sort(es.begin(), es.end());
  for (const GraphEdge& e : es) {
    key.push_back(e.u);
    key.push_back(e.v);
    key.push_back(e.tree ? 1 : 0);
  }
  return key;
}

DecoratedGraph relabel(const DecoratedGraph& G, const std::vector<int>& perm) {
  DecoratedGraph out = G;
  for (int& v : out.leaf_vertex) v = perm[v];
  for (GraphEdge& e : out.edges) {
    int a = perm[e.u], b = perm[e.v];
    e = {std::min(a, b), std::max(a, b), e.tree};
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

DecoratedGraph base03() {
  DecoratedGraph G;
  G.vertices = 1;
  G.leaf_vertex = {0, 0, 0};
  return G;
}

DecoratedGraph base11() {
  DecoratedGraph G;
  G.genus = 1;
  G.vertices = 1;
  G.leaf_vertex = {0};
  G.edges = {{0, 0, false}};
  return G;
}

std::vector<DecoratedGraph> generate(int g, int m);

const std::vector<DecoratedGraph>& cached(int g, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<DecoratedGraph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, m});
    if (it != cache.end()) return it->second;
  }
  std::vector<DecoratedGraph> v = generate(g, m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(g, m), std::move(v)).first->second;
}

std::vector<DecoratedGraph> generate(int g, int m) {
  if (g < 0 || m < 1 || 2 * g + m < 3) return {};
  if (g == 0 && m == 3) {
    DecoratedGraph G = base03();
    G.automorphisms = G.count_automorphisms();
    return {G};
  }
  if (g == 1 && m == 1) {
    DecoratedGraph G = base11();
    G.automorphisms = G.count_automorphisms();
    return {G};
  }
  const int n = m - 1;
  std::map<std::vector<int>, DecoratedGraph> found;
  auto add = [&](DecoratedGraph G) {
    G.genus = g;
    DecoratedGraph c = G.canonical();
    found.emplace(c.canonical_key(), std::move(c));
  };
  auto shifted = [](const DecoratedGraph& S, int off, DecoratedGraph& G) {
    for (const GraphEdge& e : S.edges) G.edges.push_back({e.u + off, e.v + off, e.tree});
  };

  // I: root vertex carries leaf k and a tree edge
  for (int k = 1; k <= n; ++k) {
    for (const DecoratedGraph& S : cached(g, n)) {
      DecoratedGraph G;
      G.vertices = S.vertices + 1;
      G.leaf_vertex.assign(m, 0);
      for (int l = 1, j = 1; l <= n; ++l)
        if (l != k) G.leaf_vertex[l] = S.leaf_vertex[j++] + 1;
      shifted(S, 1, G);
      G.edges.push_back({0, S.leaf_vertex[0] + 1, true});
      add(std::move(G));
    }
  }
  // I': a tree edge and a non-tree edge
  for (const DecoratedGraph& S : cached(g - 1, m + 1)) {
    DecoratedGraph G;
    G.vertices = S.vertices + 1;
    G.leaf_vertex.assign(m, 0);
    for (int l = 1; l <= n; ++l) G.leaf_vertex[l] = S.leaf_vertex[l + 1] + 1;
    shifted(S, 1, G);
    G.edges.push_back({0, S.leaf_vertex[0] + 1, true});
    G.edges.push_back({0, S.leaf_vertex[1] + 1, false});
    add(std::move(G));
  }
  // II: two tree edges
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> p1, p2;
    for (int l = 1; l <= n; ++l) ((mask >> (l - 1)) & 1u ? p1 : p2).push_back(l);
    for (int g1 = 0; g1 <= g; ++g1) {
      if (2 * g1 + static_cast<int>(p1.size()) + 1 < 3) continue;
      if (2 * (g - g1) + static_cast<int>(p2.size()) + 1 < 3) continue;
      for (const DecoratedGraph& S1 : cached(g1, static_cast<int>(p1.size()) + 1)) {
        for (const DecoratedGraph& S2 : cached(g - g1, static_cast<int>(p2.size()) + 1)) {
          DecoratedGraph G;
          G.vertices = 1 + S1.vertices + S2.vertices;
          G.leaf_vertex.assign(m, 0);
          for (std::size_t j = 0; j < p1.size(); ++j) G.leaf_vertex[p1[j]] = S1.leaf_vertex[j + 1] + 1;
          for (std::size_t j = 0; j < p2.size(); ++j) G.leaf_vertex[p2[j]] = S2.leaf_vertex[j + 1] + 1 + S1.vertices;
          shifted(S1, 1, G);
          shifted(S2, 1 + S1.vertices, G);
          G.edges.push_back({0, S1.leaf_vertex[0] + 1, true});
          G.edges.push_back({0, S2.leaf_vertex[0] + 1 + S1.vertices, true});
          add(std::move(G));
        }
      }
    }
  }
  std::vector<DecoratedGraph> out;
  out.reserve(found.size());
  for (auto& [key, G] : found) {
    G.automorphisms = G.count_automorphisms();
    out.push_back(std::move(G));
  }
  return out;
}

}  // namespace

void DecoratedGraph::validate() const {
  auto fail = [](const char* what) { throw std::invalid_argument(std::string("graph: ") + what); };
  if (genus < 0 || vertices < 1 || leaf_vertex.empty()) fail("empty graph");
  const int n = leaves() - 1;
  if (vertices != 2 * genus - 1 + n) fail("wrong number of vertices");
  std::vector<int> degree(vertices, 0);
  for (int v : leaf_vertex) {
    if (v < 0 || v >= vertices) fail("leaf on a missing vertex");
    ++degree[v];
  }
  std::vector<std::vector<int>> tree_adj(vertices), adj(vertices);
  int tree_edges = 0;
  for (const GraphEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) fail("edge on a missing vertex");
    degree[e.u]++;
    degree[e.v]++;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    if (e.tree) {
      if (e.u == e.v) fail("loop in the spanning tree");
      tree_adj[e.u].push_back(e.v);
      tree_adj[e.v].push_back(e.u);
      ++tree_edges;
    }
  }
  for (int d : degree)
    if (d != 3) fail("vertex is not trivalent");
  if (static_cast<int>(edges.size()) - vertices + 1 != genus) fail("first Betti number differs from the genus");
  if (tree_edges != vertices - 1) fail("spanning tree has the wrong size");
  // tree connectivity from the root vertex, with depths and parents
  std::vector<int> parent(vertices, -2), depth(vertices, 0);
  std::vector<int> stack{root_vertex()};
  parent[root_vertex()] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : tree_adj[v]) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      stack.push_back(w);
    }
  }
  for (int p : parent)
    if (p == -2) fail("spanning tree is not connected");
  auto ancestor = [&](int a, int b) {
    while (depth[b] > depth[a]) b = parent[b];
    return a == b;
  };
  for (const GraphEdge& e : edges) {
    if (e.tree || e.u == e.v) continue;
    if (!ancestor(e.u, e.v) && !ancestor(e.v, e.u)) fail("non-tree edge joins unrelated vertices");
  }
}

std::vector<int> DecoratedGraph::canonical_key() const {
  std::vector<int> perm = identity_perm(vertices), best;
  do {
    std::vector<int> k = encode(*this, perm);
    if (best.empty() || k < best) best = std::move(k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DecoratedGraph DecoratedGraph::canonical() const {
  std::vector<int> perm = identity_perm(vertices), best_perm = perm, best;
  do {
    std::vector<int> k = encode(*this, perm);
    if (best.empty() || k < best) {
      best = std::move(k);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return relabel(*this, best_perm);
}

int DecoratedGraph::count_automorphisms() const {
  std::vector<int> perm = identity_perm(vertices);
  const std::vector<int> self = encode(*this, perm);
  int count = 0;
  do {
    if (encode(*this, perm) == self) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<DecoratedGraph> enumerate_graphs(int g, int n_plus_1) {
  if (g < 0 || n_plus_1 < 0) throw std::invalid_argument("enumerate_graphs: negative argument");
  if (n_plus_1 < 1) throw std::invalid_argument("enumerate_graphs: a graph needs a root leaf");
  return cached(g, n_plus_1);
}

Scalar graph_weight(const DecoratedGraph& G, const Colouring& col, const SQASTensors& t) {
  require_no_extra(t);
  if (static_cast<int>(col.leaves.size()) != G.leaves() || col.edges.size() != G.edges.size())
    throw std::invalid_argument("graph_weight: colouring does not match the graph");
  for (int c : col.leaves) t.basis.require_label(c);
  for (std::size_t e = 0; e < G.edges.size(); ++e)
    if (G.edges[e].u != G.edges[e].v) t.basis.require_label(col.edges[e]);

  const OddMask& odd = t.basis.odd_mask();
  const int i = col.leaves[0];
  const Split s = decompose(G);
  switch (s.kind) {
    case Case::base03:
      return t.get_A({i, col.leaves[1], col.leaves[2]});
    case Case::base11:
      return t.get_D(i);
    case Case::one: {
      Tuple a(col.leaves.begin() + 1, col.leaves.end());
      Scalar b = t.get_B({i, col.leaves[s.k], col.edges[s.e1]});
      if (b.is_zero()) return Scalar();
      Scalar w = b * graph_weight(s.p1.graph, restrict(s.p1, col), t);
      return move_to_front_sign(a, s.k - 1, odd) > 0 ? w : -w;
    }
    case Case::one_prime: {
      Scalar c = t.get_C({i, col.edges[s.e2], col.edges[s.e1]});
      if (c.is_zero()) return Scalar();
      return Scalar::fraction(1, 2) * c * graph_weight(s.p1.graph, restrict(s.p1, col), t);
    }
    case Case::two: {
      Tuple a(col.leaves.begin() + 1, col.leaves.end());
      Scalar c = t.get_C({i, col.edges[s.e1], col.edges[s.e2]});
      if (c.is_zero()) return Scalar();
      Scalar w = c * graph_weight(s.p1.graph, restrict(s.p1, col), t) *
                 graph_weight(s.p2.graph, restrict(s.p2, col), t);
      return unshuffle_sign(a, s.pos1, odd) > 0 ? w : -w;
    }
  }
  return Scalar();
}

GraphOracle::GraphOracle(SQASTensors t) : t_(std::make_shared<const SQASTensors>(std::move(t))) {
  require_no_extra(*t_);
  for (const auto& [iab, v] : t_->B.expanded(t_->basis)) b_by_upper_[iab[2]].push_back({{iab[0], iab[1]}, v});
  for (const auto& [ibc, v] : t_->C.expanded(t_->basis)) c_by_pair_[{ibc[1], ibc[2]}].push_back({ibc[0], v});
}

const std::map<Tuple, Scalar>& GraphOracle::weights(const DecoratedGraph& G) {
  std::vector<int> key = G.canonical_key();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const SQASTensors& t = *t_;
  const OddMask& odd = t.basis.odd_mask();
  std::map<Tuple, Scalar> W;
  auto put = [&W](Tuple k, const Scalar& v) {
    if (v.is_zero()) return;
    Scalar& slot = W[std::move(k)];
    slot += v;
  };
  const Split s = decompose(G);
  switch (s.kind) {
    case Case::base03:
      for (const auto& [iab, v] : t.A.expanded(t.basis)) put(iab, v);
      break;
    case Case::base11:
      for (const auto& [i, v] : t.D) put({i}, v);
      break;
    case Case::one: {
      const std::map<Tuple, Scalar>& sub = weights(s.p1.graph);
      for (const auto& [key1, w] : sub) {
        auto bit = b_by_upper_.find(key1[0]);
        if (bit == b_by_upper_.end()) continue;
        for (const auto& [ia, bv] : bit->second) {
          Tuple a(key1.begin() + 1, key1.end());
          a.insert(a.begin() + (s.k - 1), ia[1]);
          Scalar v = bv * w;
          if (move_to_front_sign(a, s.k - 1, odd) < 0) v = -v;
          a.insert(a.begin(), ia[0]);
          put(std::move(a), v);
        }
      }
      break;
    }
    case Case::one_prime: {
      const std::map<Tuple, Scalar>& sub = weights(s.p1.graph);
      const Scalar half = Scalar::fraction(1, 2);
      for (const auto& [key1, w] : sub) {
        // key1 = (c, b, a_1..a_n), weight C_i^{bc}
        auto cit = c_by_pair_.find({key1[1], key1[0]});
        if (cit == c_by_pair_.end()) continue;
        for (const auto& [i, cv] : cit->second) {
          Tuple a{i};
          a.insert(a.end(), key1.begin() + 2, key1.end());
          put(std::move(a), half * cv * w);
        }
      }
      break;
    }
    case Case::two: {
      const std::map<Tuple, Scalar>& sub1 = weights(s.p1.graph);
      const std::map<Tuple, Scalar>& sub2 = weights(s.p2.graph);
      const int n = G.leaves() - 1;
      std::vector<char> in1(n + 1, 0);
      for (int p : s.pos1) in1[p] = 1;
      for (const auto& [k1, w1] : sub1) {
        for (const auto& [k2, w2] : sub2) {
          auto cit = c_by_pair_.find({k1[0], k2[0]});
          if (cit == c_by_pair_.end()) continue;
          Tuple a(n);
          for (int q = 1, j1 = 1, j2 = 1; q <= n; ++q) a[q - 1] = in1[q] ? k1[j1++] : k2[j2++];
          const bool neg = unshuffle_sign(a, s.pos1, odd) < 0;
          for (const auto& [i, cv] : cit->second) {
            Tuple full{i};
            full.insert(full.end(), a.begin(), a.end());
            Scalar v = cv * w1 * w2;
            put(std::move(full), neg ? -v : v);
          }
        }
      }
      break;
    }
  }
  std::erase_if(W, [](const auto& kv) { return kv.second.is_zero(); });
  return memo_.emplace(std::move(key), std::move(W)).first->second;
}

const std::map<Tuple, Scalar>& GraphOracle::table(int g, int n_plus_1) {
  auto it = tables_.find({g, n_plus_1});
  if (it != tables_.end()) return it->second;
  std::map<Tuple, Scalar> sum;
  for (const DecoratedGraph& G : enumerate_graphs(g, n_plus_1)) {
    const Scalar inv = Scalar::fraction(1, G.automorphisms);
    for (const auto& [k, w] : weights(G)) sum[k] += inv * w;
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
  return tables_.emplace(std::make_pair(g, n_plus_1), std::move(sum)).first->second;
}

Scalar GraphOracle::sum(int g, int root, const Tuple& leaves) {
  if (g < 0) throw std::invalid_argument("graph_sum: negative genus");
  t_->basis.require_label(root);
  for (int a : leaves) t_->basis.require_label(a);
  Tuple k{root};
  k.insert(k.end(), leaves.begin(), leaves.end());
  const auto& tab = table(g, static_cast<int>(k.size()));
  auto it = tab.find(k);
  return it == tab.end() ? Scalar() : it->second;
}

Scalar graph_sum(int g, int root, const Tuple& leaves, const SQASTensors& t) {
  GraphOracle oracle(t);
  return oracle.sum(g, root, leaves);
}

ConstraintReport compare_oracle(const SQASTensors& t, const std::map<TableKey, Scalar>& values, int max_level) {
  require_no_extra(t);
  if (max_level < 1) throw std::invalid_argument("compare_oracle: max_level must be >= 1");
  const OddMask& odd = t.basis.odd_mask();
  auto value_of = [&](int g, Tuple k) {
    const int s = sort_graded(k, odd);
    if (s == 0) return Scalar();
    auto it = values.find(TableKey{g, std::move(k)});
    if (it == values.end()) return Scalar();
    return s > 0 ? it->second : -it->second;
  };
  GraphOracle oracle(t);
  ConstraintReport rep;
  for (int level = 1; level <= max_level; ++level) {
    for (int g = 0; 2 * g <= level + 1; ++g) {
      const int n = level + 2 - 2 * g;
      if (n < 1) continue;
      const auto& gs = oracle.table(g, n);
      for (const auto& [k, v] : gs) {
        Scalar r = value_of(g, k);
        if (r != v) {
          Tuple idx{g};
          idx.insert(idx.end(), k.begin(), k.end());
          rep.add("oracle", idx, v - r);
        }
      }
      for (const auto& [key, v] : values) {
        if (key.g != g || static_cast<int>(key.indices.size()) != n || v.is_zero()) continue;
        if (gs.find(key.indices) == gs.end()) {
          Tuple idx{g};
          idx.insert(idx.end(), key.indices.begin(), key.indices.end());
          rep.add("oracle", idx, -v);
        }
      }
    }
  }
  return rep;
}

ConstraintReport compare_oracle(const SQASTensors& t, int max_level) {
  require_no_extra(t);
  if (max_level < 1) throw std::invalid_argument("compare_oracle: max_level must be >= 1");
  FreeEnergyTable table = compute_free_energy(t, max_level);
  return compare_oracle(t, table.entries(), max_level);
}

}  // namespace sqas
