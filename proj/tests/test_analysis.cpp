#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphtok/analysis.hpp"
#include "oracles.hpp"

using namespace graphtok;

TEST(Detector, TriangleAtLengthThree) {
  const DetectorResult r = rw_walk_detector(oracle::cycle(3), 3);
  EXPECT_DOUBLE_EQ(r.epsilon, 1.0 / 27);
  for (int v = 0; v < 3; ++v) {
    EXPECT_DOUBLE_EQ(r.return_prob[v], 0.25);
    EXPECT_DOUBLE_EQ(r.activation[v], 1.0);
    EXPECT_TRUE(r.node_detects[v]);
  }
  EXPECT_TRUE(r.graph_detects);
  EXPECT_EQ(r.subthreshold_nodes, 0);
}

TEST(Detector, BipartiteGraphsHaveNoOddWalks) {
  const DetectorResult r = rw_walk_detector(oracle::complete_bipartite(3, 4), 5);
  for (double h : r.activation) EXPECT_EQ(h, 0.0);
  EXPECT_FALSE(r.graph_detects);
  EXPECT_TRUE(rw_walk_detector(oracle::complete_bipartite(3, 4), 4).graph_detects);
}

TEST(Detector, AgreesWithWalkCounts) {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 11;
    const int k = 1 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const DetectorResult r = rw_walk_detector(g, k);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      const bool exact = oracle::count_closed_walks(g, v, k) > 0;
      EXPECT_EQ(r.node_detects[v], exact);
      any = any || exact;
    }
    EXPECT_EQ(r.graph_detects, any);
    EXPECT_EQ(r.subthreshold_nodes, 0);
  }
}

TEST(Detector, ReturnProbabilityBoundedBelow) {
  // A positive return probability over k steps is at least n^-k.
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    const int k = 2 + trial % 5;
    const DetectorResult r = rw_walk_detector(oracle::random_graph(n, 0.4, rng), k);
    for (double x : r.return_prob) EXPECT_TRUE(x == 0.0 || x >= r.epsilon);
  }
}

TEST(Detector, Errors) {
  EXPECT_THROW(rw_walk_detector(oracle::cycle(3), 0), std::invalid_argument);
  EXPECT_THROW(rw_walk_detector(oracle::complete(100), 200), std::domain_error);
}

TEST(Gradient, IdentityOnFixtures) {
  for (const Graph& g : {oracle::petersen(), oracle::complete(5), oracle::path(6),
                         oracle::complete_bipartite(2, 5)}) {
    for (int v = 0; v < g.n(); ++v) {
      const int u = (v + 1) % g.n();
      const GradientReport r = edge_gradient_check(g, u, v);
      const double d = g.degree(v);
      EXPECT_EQ(r.node_degree, g.degree(v));
      EXPECT_NEAR(r.analytic_grad_norm_sq, d * d + d, 1e-9);
      EXPECT_NEAR(r.laplacian_sq_diag, d * d + d, 1e-9);
      EXPECT_NEAR(r.value, g.has_edge(u, v) ? 1.0 : 0.0, 1e-9);
      EXPECT_LE(r.fd_max_error, 1e-6);
    }
  }
}

TEST(Gradient, LaplacianSquareDiagonalIndependently) {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(12, 0.4, rng);
    // [L^2]_vv = d_v^2 + sum over neighbours of 1.
    for (int v = 0; v < 12; ++v) {
      const int u = (v + 3) % 12;
      const GradientReport r = edge_gradient_check(g, u, v);
      const double d = g.degree(v);
      EXPECT_NEAR(r.laplacian_sq_diag, d * d + d, 1e-12);
      EXPECT_LE(r.identity_residual, 1e-6 * (d * d + d + 1));
    }
  }
}

TEST(Gradient, Errors) {
  EXPECT_THROW(edge_gradient_check(oracle::path(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(edge_gradient_check(oracle::path(3), 0, 5), std::invalid_argument);
}

TEST(CheckGroups, NamesRoundTrip) {
  for (auto g : {CheckGroup::t4, CheckGroup::t1_laplacian, CheckGroup::lemma,
                 CheckGroup::t3_gadget, CheckGroup::t5_gadget, CheckGroup::t7,
                 CheckGroup::rw_detector}) {
    EXPECT_EQ(parse_check_group(to_string(g)), g);
  }
  EXPECT_FALSE(parse_check_group("t9").has_value());
}

TEST(Suite, T4HasExactlyTwoChecks) {
  SuiteConfig c;
  c.groups = {CheckGroup::t4};
  const VerificationReport r = run_verification_suite(c);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].name, "t4.rw_token_equality");
  EXPECT_EQ(r.checks[1].name, "t4.planarity_flip");
  EXPECT_TRUE(r.checks[1].pass);
}

TEST(Suite, CorruptedPairFails) {
  SuiteConfig c;
  c.groups = {CheckGroup::t4};
  GadgetPair p = planar_gm_pair();
  p.g2 = with_edge(p.g2, 10, 11);
  c.gm_pair_override = p;
  const VerificationReport r = run_verification_suite(c);
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_FALSE(r.overall());
}

TEST(Suite, SmallSweepPassesAndIsDeterministic) {
  SuiteConfig c;
  c.groups = {CheckGroup::t1_laplacian, CheckGroup::lemma, CheckGroup::t3_gadget,
              CheckGroup::t5_gadget, CheckGroup::t7, CheckGroup::rw_detector};
  c.twin_max_n = 12;
  c.lemma_graphs = 30;
  c.s5_instances = 20;
  c.disjointness_random = 30;
  c.gradient_graphs = 10;
  c.gradient_max_n = 12;
  c.detector_graphs = 50;
  const VerificationReport a = run_verification_suite(c);
  EXPECT_TRUE(a.overall());
  for (const auto& check : a.checks) {
    EXPECT_TRUE(check.pass) << check.name << ": " << check.detail;
    EXPECT_EQ(check.elapsed_ms, 0.0);
  }
  const VerificationReport b = run_verification_suite(c);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
}

TEST(Suite, GroupOrderIsCanonical) {
  SuiteConfig c;
  c.groups = {CheckGroup::t5_gadget, CheckGroup::t4};
  c.disjointness_random = 5;
  const VerificationReport r = run_verification_suite(c);
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks.front().name.substr(0, 3), "t4.");
  EXPECT_EQ(r.checks.back().name, "t5.disjointness_gadget");
}

TEST(Suite, ReportJsonShape) {
  VerificationReport r;
  r.checks.push_back({"a", true, 0.5, 0.0, "ok"});
  r.checks.push_back({"b", false, std::numeric_limits<double>::infinity(), 0.0, "boom"});
  const auto j = report_to_json(r);
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_TRUE(j["checks"][1]["residual"].is_null());
  EXPECT_EQ(j["overall"], false);
}
