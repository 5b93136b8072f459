#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphtok/constructions.hpp"
#include "graphtok/spectra.hpp"
#include "oracles.hpp"

using namespace graphtok;

namespace {

void expect_values(const Eigen::VectorXd& got, std::initializer_list<double> want, double tol) {
  ASSERT_EQ(got.size(), static_cast<Eigen::Index>(want.size()));
  int i = 0;
  for (double w : want) EXPECT_NEAR(got(i++), w, tol);
}

void expect_invariants(const DenseMatrix& m, const EigenSystem& es, double tol) {
  const int n = es.size();
  const double scale = std::max(1.0, inf_norm(m));
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd r = m * es.vectors.col(i) - es.values(i) * es.vectors.col(i);
    EXPECT_LE(r.cwiseAbs().maxCoeff(), tol * scale);
    if (i > 0) EXPECT_LE(es.values(i - 1), es.values(i));
    for (int j = 0; j < n; ++j) {
      if (std::abs(es.vectors(j, i)) > kTolSign) {
        EXPECT_GT(es.vectors(j, i), 0.0) << "column " << i;
        break;
      }
    }
  }
  const DenseMatrix gram = es.vectors.transpose() * es.vectors;
  EXPECT_LE((gram - DenseMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), tol);
}

}  // namespace

TEST(Eigen, SingleEdge) {
  const EigenSystem es = laplacian_eigensystem(Graph(2, {{0, 1}}));
  expect_values(es.values, {0.0, 2.0}, 1e-12);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(es.vectors(0, 0), r, 1e-12);
  EXPECT_NEAR(es.vectors(1, 0), r, 1e-12);
  EXPECT_NEAR(es.vectors(0, 1), r, 1e-12);
  EXPECT_NEAR(es.vectors(1, 1), -r, 1e-12);
}

TEST(Eigen, CompleteBipartiteTwoFour) {
  expect_values(laplacian_eigensystem(oracle::complete_bipartite(2, 4)).values,
                {0, 2, 2, 2, 4, 6}, 1e-9);
}

TEST(Eigen, CliqueJoinAtSix) {
  expect_values(laplacian_eigensystem(clique_join_twin_pair(6).g1).values, {0, 4, 6, 6, 6, 6},
                1e-9);
}

TEST(Eigen, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 40;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    for (auto kind : {LaplacianKind::combinatorial, LaplacianKind::sym_normalized}) {
      const DenseMatrix l = laplacian(g, kind);
      expect_invariants(l, eigendecompose(l), kDefaultTolEig);
    }
  }
}

TEST(Eigen, DegenerateBlocksStayOrthonormal) {
  for (const Graph& g : {oracle::complete(7), oracle::petersen(), oracle::complete_bipartite(3, 5),
                         oracle::cycle(8), Graph(5, {})}) {
    const DenseMatrix l = laplacian(g);
    expect_invariants(l, eigendecompose(l), kDefaultTolEig);
  }
}

TEST(Eigen, AgreesWithJacobiOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 20;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const DenseMatrix l = laplacian(g);
    const auto ref = oracle::jacobi_eigen(l);
    const EigenSystem es = eigendecompose(l);
    EXPECT_LE((ref.values - es.values).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Eigen, ReconstructionProperty) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 3) / 2.0, rng);
    const DenseMatrix l = laplacian(g);
    const EigenSystem es = eigendecompose(l);
    const DenseMatrix back = es.vectors * es.values.asDiagonal() * es.vectors.transpose();
    EXPECT_LE((back - l).cwiseAbs().maxCoeff(), 10 * kDefaultTolEig * inf_norm(l));
    double degree_sum = 0.0;
    for (int d : g.degrees()) degree_sum += d;
    EXPECT_NEAR(es.values.sum(), degree_sum, 1e-9 * std::max(1.0, degree_sum));
  }
}

TEST(Eigen, RejectsBadInput) {
  DenseMatrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(eigendecompose(m), EigenError);
  m << 1, NAN, NAN, 1;
  EXPECT_THROW(eigendecompose(m), EigenError);
  EXPECT_THROW(eigendecompose(DenseMatrix(2, 3)), EigenError);
}

TEST(CompareSpectra, IdenticalSystems) {
  const EigenSystem es = laplacian_eigensystem(oracle::petersen());
  const SpectrumDiff d = compare_spectra(es, es);
  EXPECT_EQ(d.matched, 10);
  EXPECT_TRUE(d.changed.empty());
}

TEST(CompareSpectra, BipartiteTwinPair) {
  const GadgetPair p = bipartite_twin_pair(6);
  const SpectrumDiff d = compare_spectra(laplacian_eigensystem(p.g1), laplacian_eigensystem(p.g2));
  EXPECT_EQ(d.matched, 5);
  ASSERT_EQ(d.changed.size(), 1u);
  // The twins have degree n - 2 = 4, so the moving eigenvalue is 4 -> 6.
  EXPECT_NEAR(d.changed[0].first, 4.0, 1e-9);
  EXPECT_NEAR(d.changed[0].second, 6.0, 1e-9);
}

TEST(CompareSpectra, CliqueJoinPair) {
  const GadgetPair p = clique_join_twin_pair(6);
  const SpectrumDiff d = compare_spectra(laplacian_eigensystem(p.g1), laplacian_eigensystem(p.g2));
  ASSERT_EQ(d.changed.size(), 1u);
  EXPECT_NEAR(d.changed[0].first, 4.0, 1e-9);
  EXPECT_NEAR(d.changed[0].second, 6.0, 1e-9);
}

TEST(CompareSpectra, DimensionMismatch) {
  EXPECT_THROW(compare_spectra(Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(4)),
               std::invalid_argument);
}

TEST(TwinLemma, CompleteBipartite) {
  const TwinEdgeReport r = verify_twin_edge_lemma(oracle::complete_bipartite(2, 4), 0, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.degree, 4);
  EXPECT_EQ(r.triangle_delta, 4);
  ASSERT_EQ(r.spectrum.changed.size(), 1u);
  EXPECT_NEAR(r.spectrum.changed[0].second - r.spectrum.changed[0].first, 2.0, 1e-9);
}

TEST(TwinLemma, FourCycleDiagonal) {
  const TwinEdgeReport r = verify_twin_edge_lemma(oracle::cycle(4), 0, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.triangle_delta, 2);
  ASSERT_EQ(r.spectrum.changed.size(), 1u);
  EXPECT_NEAR(r.spectrum.changed[0].first, 2.0, 1e-9);
  EXPECT_NEAR(r.spectrum.changed[0].second, 4.0, 1e-9);
}

TEST(TwinLemma, PathEndpoints) {
  const TwinEdgeReport r = verify_twin_edge_lemma(oracle::path(3), 0, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.triangle_delta, 1);
}

TEST(TwinLemma, NonTwinsAreReported) {
  const TwinEdgeReport r = verify_twin_edge_lemma(oracle::path(4), 0, 3);
  EXPECT_FALSE(r.twins);
  EXPECT_FALSE(r.passed());
}

TEST(TwinLemma, Preconditions) {
  EXPECT_THROW(verify_twin_edge_lemma(oracle::path(3), 0, 1), std::invalid_argument);
  EXPECT_THROW(verify_twin_edge_lemma(oracle::path(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(verify_twin_edge_lemma(oracle::path(3), 0, 7), std::invalid_argument);
}

TEST(TwinLemma, EveryTwinPairInRandomGraphs) {
  std::mt19937_64 rng(47);
  int pairs = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 14;
    const Graph g = oracle::random_graph(n, 0.3 + 0.2 * (trial % 3), rng);
    for (const auto& [u, v] : find_twin_pairs(g)) {
      const TwinEdgeReport r = verify_twin_edge_lemma(g, u, v);
      EXPECT_TRUE(r.passed()) << "n=" << n << " u=" << u << " v=" << v;
      EXPECT_EQ(r.triangle_delta, r.degree);
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(TwinLemma, FindTwinPairsBruteForce) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(8, 0.4, rng);
    std::vector<std::pair<int, int>> expected;
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (!g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v)) expected.push_back({u, v});
    EXPECT_EQ(find_twin_pairs(g), expected);
  }
}
