#include <gtest/gtest.h>

#include <random>

#include "graphtok/planarity.hpp"
#include "oracles.hpp"

using namespace graphtok;

TEST(Planarity, ClassicalFixtures) {
  EXPECT_FALSE(is_planar(oracle::complete(5)).planar);
  EXPECT_FALSE(is_planar(oracle::complete_bipartite(3, 3)).planar);
  EXPECT_FALSE(is_planar(oracle::petersen()).planar);
  EXPECT_TRUE(is_planar(oracle::complete(4)).planar);
  EXPECT_TRUE(is_planar(oracle::complete_bipartite(2, 9)).planar);
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(is_planar(oracle::cycle(n)).planar);
  std::mt19937_64 rng(107);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_planar(oracle::random_tree(2 + i, rng)).planar);
}

TEST(Planarity, TrivialGraphs) {
  EXPECT_TRUE(is_planar(Graph(1, {})).planar);
  EXPECT_TRUE(is_planar(Graph(6, {})).planar);
  EXPECT_EQ(is_planar(Graph(3, {{0, 1}})).method, "small-order");
}

TEST(Planarity, EdgeBoundShortcut) {
  const PlanarityVerdict v = is_planar(oracle::complete(7));
  EXPECT_FALSE(v.planar);
  EXPECT_TRUE(v.edge_bound_shortcut);
  EXPECT_EQ(v.method, "edge-bound");
  const PlanarityVerdict w = is_planar(oracle::complete_bipartite(3, 3));
  EXPECT_FALSE(w.edge_bound_shortcut);
  EXPECT_EQ(w.method, "left-right");
}

TEST(Planarity, SubdividedKuratowskiGraphs) {
  // K5 with every edge subdivided once.
  std::vector<Edge> e;
  int next = 5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      e.push_back({i, next});
      e.push_back({next, j});
      ++next;
    }
  EXPECT_FALSE(is_planar(Graph(next, e)).planar);
  // Disconnected union of a planar part and K3,3.
  std::vector<Edge> f = {{0, 1}, {1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.push_back({3 + i, 6 + j});
  EXPECT_FALSE(is_planar(Graph(9, f)).planar);
}

TEST(Planarity, ExhaustiveAgainstKuratowskiUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const auto pairs = oracle::pair_list(n);
    int nonplanar = 0;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      const Graph g = oracle::graph_from_mask(n, pairs, mask);
      const bool expected = oracle::kuratowski_planar(g);
      ASSERT_EQ(is_planar(g).planar, expected) << "n=" << n << " mask=" << mask;
      nonplanar += expected ? 0 : 1;
    }
    if (n <= 4) EXPECT_EQ(nonplanar, 0);
    if (n == 5) EXPECT_EQ(nonplanar, 1);  // only K5 itself
  }
}

TEST(Planarity, RandomLargerGraphsAgainstKuratowski) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 8 + trial % 4;
    // Densities around the planarity threshold give a mix of verdicts.
    const Graph g = oracle::random_graph(n, 0.25 + 0.05 * (trial % 5), rng);
    ASSERT_EQ(is_planar(g).planar, oracle::kuratowski_planar(g)) << "trial " << trial;
  }
}

TEST(Planarity, RelabelInvariance) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 10;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const auto perm = oracle::random_permutation(n, rng);
    EXPECT_EQ(is_planar(g).planar, is_planar(relabel(g, perm)).planar);
  }
}

TEST(Planarity, EdgeDeletionKeepsPlanarity) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(10, 0.3, rng);
    if (!is_planar(g).planar || g.num_edges() == 0) continue;
    const Edge e = g.edges()[rng() % g.num_edges()];
    EXPECT_TRUE(is_planar(without_edge(g, e.u, e.v)).planar);
  }
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(9, 0.5, rng);
    if (is_planar(g).planar) continue;
    // Adding edges never restores planarity.
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (!g.has_edge(u, v) && rng() % 4 == 0) g = with_edge(g, u, v);
    EXPECT_FALSE(is_planar(g).planar);
  }
}

TEST(Planarity, MaximalPlanarGraphs) {
  // Wheels and stacked triangulations reach 3n - 6 edges and stay planar.
  for (int n = 4; n <= 20; ++n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) {
      e.push_back({0, i});
      e.push_back({i, i == n - 1 ? 1 : i + 1});
    }
    EXPECT_TRUE(is_planar(Graph(n, e)).planar) << "wheel " << n;
  }
  std::mt19937_64 rng(131);
  std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < 40; ++v) {
    const std::size_t f = rng() % faces.size();
    const auto face = faces[f];
    for (int x : face) e.push_back({x, v});
    faces[f] = {face[0], face[1], v};
    faces.push_back({face[1], face[2], v});
    faces.push_back({face[0], face[2], v});
  }
  const Graph tri(40, e);
  EXPECT_EQ(tri.num_edges(), 3u * 40 - 6);
  EXPECT_TRUE(is_planar(tri).planar);
  // Any further edge exceeds 3n - 6.
  for (int u = 0; u < 40; ++u) {
    for (int v = u + 1; v < 40; ++v) {
      if (tri.has_edge(u, v)) continue;
      EXPECT_FALSE(is_planar(with_edge(tri, u, v)).planar);
      return;
    }
  }
}
