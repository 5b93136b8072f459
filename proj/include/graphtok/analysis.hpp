#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphtok/constructions.hpp"
#include "graphtok/graph.hpp"
#include "graphtok/spectra.hpp"

namespace graphtok {

inline constexpr double kDefaultTolDet = 1e-9;
inline constexpr double kDefaultFdStep = 1e-5;

// ---------------------------------------------------------------------------
// Two-layer walk detector on random-walk tokens
// ---------------------------------------------------------------------------

struct DetectorResult {
  double epsilon = 0.0;              ///< n^{-k}
  std::vector<double> return_prob;  ///< x_v = (P^k)_{vv}
  std::vector<double> activation;   ///< h_v = ReLU(x/eps) - ReLU(x/eps - 1)
  std::vector<bool> node_detects;   ///< h_v >= 1 - tol_det
  double mean_activation = 0.0;
  bool graph_detects = false;  ///< mean >= 1/n - tol_det
  /// Nodes with 0 < x_v < eps; the construction assumes there are none.
  int subthreshold_nodes = 0;
};

/// First layer: attention with zero value map, then the clamp neuron on the
/// k-th return probability. Second layer: uniform attention (mean) followed by
/// a 1/n threshold. Throws std::domain_error when n^k is not representable.
DetectorResult rw_walk_detector(const Graph& g, int k, double tol_det = kDefaultTolDet);

// ---------------------------------------------------------------------------
// Edge-reconstruction gradient
// ---------------------------------------------------------------------------

/// f(x) = -x^T Lambda y with x = U_u, y = U_v (rows of the eigenvector matrix
/// of the combinatorial Laplacian). grad_x f = -Lambda y.
struct GradientReport {
  int node_degree = 0;                  ///< d_v
  double value = 0.0;                   ///< f(U_u); equals A_uv
  double analytic_grad_norm_sq = 0.0;   ///< ||Lambda y||^2
  double laplacian_sq_diag = 0.0;       ///< [L^2]_vv from the matrix product
  double identity_residual = 0.0;       ///< |analytic - (d_v^2 + d_v)|
  double fd_max_error = 0.0;            ///< central differences vs analytic
};

GradientReport edge_gradient_check(const Graph& g, int u, int v, double fd_step = kDefaultFdStep);
GradientReport edge_gradient_check(const Graph& g, const EigenSystem& es, int u, int v,
                                   double fd_step = kDefaultFdStep);

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

enum class CheckGroup { t4, t1_laplacian, lemma, t3_gadget, t5_gadget, t7, rw_detector };

std::string to_string(CheckGroup g);
/// Accepts the names produced by to_string; nullopt otherwise.
std::optional<CheckGroup> parse_check_group(const std::string& name);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall() const;
};

struct SuiteConfig {
  std::vector<CheckGroup> groups;  ///< run in the canonical order regardless of listing
  std::uint64_t seed = 20260101;
  bool record_timings = false;     ///< otherwise elapsed_ms stays 0

  std::optional<GadgetPair> gm_pair_override;  ///< replaces planar_gm_pair() for t4
  int gm_max_walk = 24;
  double gm_tol = 1e-10;

  int twin_min_n = 5;
  int twin_max_n = 64;

  int lemma_graphs = 200;
  int lemma_max_n = 16;

  int s5_instances = 200;
  std::vector<int> s5_word_lengths = {2, 3, 4, 5};

  int disjointness_random = 500;
  std::vector<int> disjointness_sizes = {3, 4, 5};

  int gradient_graphs = 100;
  int gradient_max_n = 32;
  double fd_step = kDefaultFdStep;

  int detector_graphs = 500;
  int detector_max_n = 12;
  int detector_max_k = 6;

  /// Every group with the default sweep sizes.
  static SuiteConfig all();
};

VerificationReport run_verification_suite(const SuiteConfig& config);

/// {"checks":[{"name","pass","residual","elapsed_ms"}],"overall"}
nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace graphtok
