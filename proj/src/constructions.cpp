#include "graphtok/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace graphtok {

namespace {

std::string node_name(int v) { return "node " + std::to_string(v); }

}  // namespace

SwitchingSet validate_switching_set(const Graph& g, std::span<const int> members) {
  if (members.empty()) throw ConstructionError("switching set is empty");
  std::vector<int> s(members.begin(), members.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ConstructionError("switching set has repeated nodes");
  }
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw ConstructionError(node_name(v) + " is out of range");
  }
  const int k = static_cast<int>(s.size());
  if (k % 2 != 0) {
    throw ConstructionError("switching set size " + std::to_string(k) + " is odd");
  }

  std::vector<bool> in_s(g.n(), false);
  for (int v : s) in_s[v] = true;

  SwitchingSet out;
  out.members = s;
  out.internal_degree = -1;
  for (int v : s) {
    int inside = 0;
    for (int w : g.neighbors(v)) inside += in_s[w] ? 1 : 0;
    if (out.internal_degree < 0) {
      out.internal_degree = inside;
    } else if (inside != out.internal_degree) {
      throw ConstructionError("induced subgraph on S is not regular: " + node_name(s.front()) +
                              " has " + std::to_string(out.internal_degree) +
                              " neighbours in S but " + node_name(v) + " has " +
                              std::to_string(inside));
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (in_s[v]) continue;
    int count = 0;
    for (int w : g.neighbors(v)) count += in_s[w] ? 1 : 0;
    if (count != 0 && count != k / 2 && count != k) {
      throw ConstructionError(node_name(v) + " outside S has " + std::to_string(count) +
                              " neighbours in S; allowed are 0, " + std::to_string(k / 2) +
                              " or " + std::to_string(k));
    }
    out.outside_profile[v] = count;
  }
  return out;
}

Graph gm_switch(const Graph& g, const SwitchingSet& s) {
  SwitchingSet fresh;
  try {
    fresh = validate_switching_set(g, s.members);
  } catch (const ConstructionError& e) {
    throw ConstructionError(std::string("invalid switching set: ") + e.what());
  }
  if (fresh.internal_degree != s.internal_degree || fresh.outside_profile != s.outside_profile) {
    throw ConstructionError("switching set evidence is stale for this graph");
  }

  const int k = static_cast<int>(s.members.size());
  std::set<int> in_s(s.members.begin(), s.members.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool cross = in_s.count(e.u) != in_s.count(e.v);
    if (cross) {
      const int outside = in_s.count(e.u) ? e.v : e.u;
      if (s.outside_profile.at(outside) == k / 2) continue;
    }
    edges.push_back(e);
  }
  for (const auto& [v, count] : s.outside_profile) {
    if (count != k / 2) continue;
    for (int m : s.members) {
      if (!g.has_edge(v, m)) edges.push_back({v, m});
    }
  }
  return Graph(g.n(), edges);
}

GadgetPair planar_gm_pair() {
  enum : int { s1, s2, s3, s4, u1, u2, u3, u4, u5, u6, x1, x2 };
  const std::vector<Edge> edges = {
      // O-S edges: each u_i has exactly two neighbours in S.
      {u1, s1}, {u1, s2}, {u2, s3}, {u2, s4},
      {u3, s1}, {u3, s3}, {u4, s2}, {u4, s4},
      {u5, s1}, {u5, s4}, {u6, s2}, {u6, s3},
      // structural edges outside S
      {u1, u3}, {u1, u4}, {u1, u5}, {u1, u6}, {u1, x2},
      {u2, u3}, {u2, u4}, {u2, u5}, {u2, u6}, {u2, x1},
      {u3, u5}, {u3, u6}, {u3, x2},
      {u4, u5}, {u4, u6}, {u4, x1},
      {u6, x1}, {u6, x2},
  };
  Graph g1(12, edges);
  const std::vector<int> s = {s1, s2, s3, s4};
  Graph g2 = gm_switch(g1, validate_switching_set(g1, s));
  GadgetPair pair{std::move(g1), std::move(g2), "gm_pair", {}, -1, -1, s};
  pair.claimed.kind = DeltaKind::planarity_flip;
  return pair;
}

namespace {

GadgetPair twin_pair(Graph g1, int u, int v, std::string label) {
  const int d = g1.degree(u);
  Graph g2 = with_edge(g1, u, v);
  GadgetPair pair{std::move(g1), std::move(g2), std::move(label), {}, u, v, {}};
  pair.claimed.kind = DeltaKind::eigenvalue_shift;
  pair.claimed.eigenvalue_before = d;
  pair.claimed.eigenvalue_after = d + 2;
  pair.claimed.triangle_delta = d;
  return pair;
}

void require_twin_n(int n) {
  if (n < 5) throw ConstructionError("twin pair needs n >= 5, got n = " + std::to_string(n));
}

}  // namespace

GadgetPair bipartite_twin_pair(int n) {
  require_twin_n(n);
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    for (int w = 2; w < n; ++w) edges.push_back({side, w});
  }
  return twin_pair(Graph(n, edges), 0, 1, "bipartite_twin");
}

GadgetPair clique_join_twin_pair(int n) {
  require_twin_n(n);
  const int u = n - 2;
  const int v = n - 1;
  std::vector<Edge> edges;
  for (int a = 0; a < n - 2; ++a) {
    for (int b = a + 1; b < n - 2; ++b) edges.push_back({a, b});
    edges.push_back({a, u});
    edges.push_back({a, v});
  }
  return twin_pair(Graph(n, edges), u, v, "clique_join_twin");
}

namespace {

void check_permutation(const Permutation5& p, std::size_t index) {
  std::array<bool, 5> seen{};
  for (int x : p) {
    if (x < 0 || x >= 5 || seen[x]) {
      throw ConstructionError("permutation " + std::to_string(index) +
                              " is not a bijection on {0..4}");
    }
    seen[x] = true;
  }
}

}  // namespace

WalkGadget s5_walk_gadget(std::span<const Permutation5> perms, int s, int t) {
  if (perms.size() < 2) throw ConstructionError("walk gadget needs at least 2 permutations");
  if (s < 0 || s >= 5 || t < 0 || t >= 5) throw ConstructionError("s and t must lie in [0, 5)");
  for (std::size_t i = 0; i < perms.size(); ++i) check_permutation(perms[i], i);

  WalkGadget gadget{Graph(1, {}), 0, 0, 0, 0};
  const int m = static_cast<int>(perms.size());
  gadget.layers = m + 1;
  gadget.spanning_length = m + 1;
  std::vector<Edge> edges;
  for (int l = 1; l <= m; ++l) {
    for (int i = 0; i < 5; ++i) edges.push_back({gadget.node(l - 1, i), gadget.node(l, perms[l - 1][i])});
  }
  gadget.source = gadget.node(0, s);
  gadget.target = gadget.node(m, t);
  edges.push_back({gadget.source, gadget.target});
  gadget.graph = Graph(5 * gadget.layers, edges);
  return gadget;
}

std::int64_t spanning_closed_walks(const WalkGadget& gadget) {
  const Graph& g = gadget.graph;
  const int last = gadget.layers - 1;
  IntMatrix oriented = IntMatrix::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    const int lu = e.u / 5;
    const int lv = e.v / 5;
    if (lv == lu + 1) {
      oriented(e.u, e.v) = 1;
    } else if (lu == 0 && lv == last) {
      oriented(e.v, e.u) = 1;
    }
  }
  IntMatrix power = oriented;
  for (int i = 1; i < gadget.spanning_length; ++i) power = checked_multiply(power, oriented);
  return power(gadget.source, gadget.source);
}

bool composition_maps(std::span<const Permutation5> perms, int s, int t) {
  int x = s;
  for (const auto& p : perms) x = p[x];
  return x == t;
}

Permutation5 random_permutation5(Rng& rng) {
  Permutation5 p{0, 1, 2, 3, 4};
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph disjointness_triangle_gadget(const BitMatrix& a, const BitMatrix& b) {
  if (a.size != b.size || a.size < 1) {
    throw ConstructionError("disjointness gadget needs two n x n bit matrices with n >= 1");
  }
  const int n = a.size;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j)) edges.push_back({i, n + j});
      if (b.at(j, i)) edges.push_back({n + j, 2 * n + i});
    }
    edges.push_back({i, 2 * n + i});
  }
  return Graph(3 * n, edges);
}

bool disjointness_witness_exists(const BitMatrix& a, const BitMatrix& b) {
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < a.size; ++j) {
      if (a.at(i, j) && b.at(j, i)) return true;
    }
  }
  return false;
}

Graph erdos_renyi(int n, double p, Rng& rng) {
  if (n < 1) throw ConstructionError("erdos_renyi needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ConstructionError("edge probability must lie in [0, 1]");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

namespace {

// Draws `count` distinct entries of `pool` uniformly; pool is consumed.
std::vector<Edge> sample_distinct(std::vector<Edge> pool, int count, Rng& rng) {
  std::vector<Edge> out;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t idx = pick(rng);
    out.push_back(pool[idx]);
    pool[idx] = pool.back();
    pool.pop_back();
  }
  return out;
}

}  // namespace

Graph bridge_pair_graph(int n, double p, bool connected, Rng& rng, int max_attempts) {
  if (n < 4 || n % 2 != 0) {
    throw ConstructionError("bridge pair needs an even n >= 4, got n = " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ConstructionError("edge probability must lie in [0, 1]");
  constexpr int kExtraEdges = 3;
  const int half = n / 2;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const Graph a = erdos_renyi(half, p, rng);
    const Graph b = erdos_renyi(half, p, rng);
    if (!is_connected(a) || !is_connected(b)) continue;

    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + half, e.v + half});

    std::vector<Edge> pool;
    if (connected) {
      for (int u = 0; u < half; ++u) {
        for (int v = half; v < n; ++v) pool.push_back({u, v});
      }
    } else {
      for (int side = 0; side < 2; ++side) {
        const Graph& h = side == 0 ? a : b;
        const int offset = side * half;
        for (int u = 0; u < half; ++u) {
          for (int v = u + 1; v < half; ++v) {
            if (!h.has_edge(u, v)) pool.push_back({u + offset, v + offset});
          }
        }
      }
      if (static_cast<int>(pool.size()) < kExtraEdges) {
        throw ConstructionError("halves are too dense to place rewired edges inside them");
      }
    }
    for (const Edge& e : sample_distinct(std::move(pool), kExtraEdges, rng)) edges.push_back(e);

    Graph g(n, edges);
    if (is_connected(g) != connected) {
      throw std::logic_error("bridge pair generator produced a graph contradicting its label");
    }
    return g;
  }
  throw ConstructionError("bridge pair: no connected halves after " +
                          std::to_string(max_attempts) + " attempts (p too small?)");
}

}  // namespace graphtok
