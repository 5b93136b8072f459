#include "graphtok/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "graphtok/planarity.hpp"
#include "graphtok/tokenizers.hpp"

namespace graphtok {

DetectorResult rw_walk_detector(const Graph& g, int k, double tol_det) {
  if (k < 1) throw std::invalid_argument("walk length k must be >= 1");
  const int n = g.n();
  const double log_nk = k * std::log(static_cast<double>(n));
  if (log_nk >= 300.0 * std::log(10.0)) {
    throw std::domain_error("n^k = " + std::to_string(n) + "^" + std::to_string(k) +
                            " exceeds double range; use closed_walk_diagonal instead");
  }

  DetectorResult r;
  r.epsilon = std::exp(-log_nk);
  const DenseMatrix tokens = rw_tokens(g, k).tokens;
  const auto relu = [](double z) { return std::max(0.0, z); };
  double sum = 0.0;
  for (int v = 0; v < n; ++v) {
    const double x = tokens(v, k - 1);
    const double h = relu(x / r.epsilon) - relu(x / r.epsilon - 1.0);
    r.return_prob.push_back(x);
    r.activation.push_back(h);
    r.node_detects.push_back(h >= 1.0 - tol_det);
    if (x > 0.0 && x < r.epsilon) ++r.subthreshold_nodes;
    sum += h;
  }
  r.mean_activation = sum / n;
  r.graph_detects = r.mean_activation >= 1.0 / n - tol_det;
  return r;
}

GradientReport edge_gradient_check(const Graph& g, int u, int v, double fd_step) {
  return edge_gradient_check(g, laplacian_eigensystem(g), u, v, fd_step);
}

GradientReport edge_gradient_check(const Graph& g, const EigenSystem& es, int u, int v,
                                   double fd_step) {
  if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw std::invalid_argument("edge_gradient_check needs two distinct nodes in range");
  }
  const Eigen::VectorXd x = es.vectors.row(u).transpose();
  const Eigen::VectorXd y = es.vectors.row(v).transpose();
  const Eigen::VectorXd lambda_y = es.values.cwiseProduct(y);
  const auto f = [&](const Eigen::VectorXd& z) { return -z.dot(lambda_y); };
  const Eigen::VectorXd grad = -lambda_y;

  GradientReport r;
  const int d = g.degree(v);
  r.node_degree = d;
  r.value = f(x);
  r.analytic_grad_norm_sq = grad.squaredNorm();
  const DenseMatrix l = laplacian(g);
  r.laplacian_sq_diag = l.row(v).dot(l.col(v));
  r.identity_residual = std::abs(r.analytic_grad_norm_sq - (static_cast<double>(d) * d + d));

  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + fd_step;
    const double up = f(probe);
    probe(i) = x(i) - fd_step;
    const double down = f(probe);
    probe(i) = x(i);
    r.fd_max_error = std::max(r.fd_max_error, std::abs((up - down) / (2.0 * fd_step) - grad(i)));
  }
  return r;
}

std::string to_string(CheckGroup g) {
  switch (g) {
    case CheckGroup::t4: return "t4";
    case CheckGroup::t1_laplacian: return "t1";
    case CheckGroup::lemma: return "lemma";
    case CheckGroup::t3_gadget: return "t3";
    case CheckGroup::t5_gadget: return "t5";
    case CheckGroup::t7: return "t7";
    case CheckGroup::rw_detector: return "rw";
  }
  return "unknown";
}

std::optional<CheckGroup> parse_check_group(const std::string& name) {
  for (CheckGroup g : {CheckGroup::t4, CheckGroup::t1_laplacian, CheckGroup::lemma,
                       CheckGroup::t3_gadget, CheckGroup::t5_gadget, CheckGroup::t7,
                       CheckGroup::rw_detector}) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteConfig SuiteConfig::all() {
  SuiteConfig c;
  c.groups = {CheckGroup::t4,        CheckGroup::t1_laplacian, CheckGroup::lemma,
              CheckGroup::t3_gadget, CheckGroup::t5_gadget,    CheckGroup::t7,
              CheckGroup::rw_detector};
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteConfig& config) : config_(config) {}

  VerificationReport run() {
    static constexpr CheckGroup kOrder[] = {
        CheckGroup::t4,        CheckGroup::t1_laplacian, CheckGroup::lemma, CheckGroup::t3_gadget,
        CheckGroup::t5_gadget, CheckGroup::t7,           CheckGroup::rw_detector};
    for (CheckGroup g : kOrder) {
      if (std::find(config_.groups.begin(), config_.groups.end(), g) == config_.groups.end()) {
        continue;
      }
      switch (g) {
        case CheckGroup::t4: run_t4(); break;
        case CheckGroup::t1_laplacian: run_t1(); break;
        case CheckGroup::lemma: run_lemma(); break;
        case CheckGroup::t3_gadget: run_t3(); break;
        case CheckGroup::t5_gadget: run_t5(); break;
        case CheckGroup::t7: run_t7(); break;
        case CheckGroup::rw_detector: run_detector(); break;
      }
    }
    return std::move(report_);
  }

 private:
  // Runs `body`, which fills residual/pass/detail; exceptions fail the check.
  void check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    const auto start = Clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.residual = std::numeric_limits<double>::infinity();
      r.detail = std::string("exception: ") + e.what();
    }
    if (config_.record_timings) {
      r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    report_.checks.push_back(std::move(r));
  }

  // Each group draws from its own stream so filtering does not shift results.
  Rng rng_for(CheckGroup g) const {
    return Rng(config_.seed * 1000003ULL + static_cast<std::uint64_t>(g));
  }

  static int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  static double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  void run_t4() {
    const GadgetPair pair = config_.gm_pair_override.value_or(planar_gm_pair());
    check("t4.rw_token_equality", [&](CheckResult& r) {
      if (pair.g1.n() != pair.g2.n()) throw std::invalid_argument("pair sizes differ");
      const DenseMatrix diff =
          rw_tokens(pair.g1, config_.gm_max_walk).tokens - rw_tokens(pair.g2, config_.gm_max_walk).tokens;
      r.residual = diff.cwiseAbs().maxCoeff();
      r.pass = r.residual < config_.gm_tol;
      Eigen::Index node = 0;
      Eigen::Index col = 0;
      diff.cwiseAbs().maxCoeff(&node, &col);
      std::ostringstream os;
      os << "max |diff| over t <= " << config_.gm_max_walk << " at node " << node
         << ", walk length " << col + 1;
      r.detail = os.str();
    });
    check("t4.planarity_flip", [&](CheckResult& r) {
      const bool p1 = is_planar(pair.g1).planar;
      const bool p2 = is_planar(pair.g2).planar;
      const bool same_degrees = pair.g1.degrees() == pair.g2.degrees();
      r.pass = p1 && !p2 && same_degrees;
      r.residual = r.pass ? 0.0 : 1.0;
      r.detail = std::string("g1 ") + (p1 ? "planar" : "non-planar") + ", g2 " +
                 (p2 ? "planar" : "non-planar") + ", degrees " +
                 (same_degrees ? "identical" : "differ");
    });
  }

  void run_t1() {
    struct Family {
      const char* label;
      GadgetPair (*make)(int);
      EigenSelection which;
    };
    const Family families[] = {
        {"bipartite_twin", &bipartite_twin_pair, EigenSelection::smallest},
        {"clique_join_twin", &clique_join_twin_pair, EigenSelection::largest},
    };
    constexpr double kShiftTol = 1e-6;
    constexpr double kTokenTol = 1e-7;
    for (const Family& fam : families) {
      double shift_res = 0.0;
      double token_res = 0.0;
      bool shift_ok = true;
      bool triangles_ok = true;
      std::string first_failure;
      for (int n = config_.twin_min_n; n <= config_.twin_max_n; ++n) {
        const GadgetPair pair = fam.make(n);
        const EigenSystem e1 = laplacian_eigensystem(pair.g1);
        const EigenSystem e2 = laplacian_eigensystem(pair.g2);

        const SpectrumDiff diff = compare_spectra(e1, e2, kShiftTol);
        if (diff.changed.size() != 1) {
          shift_ok = false;
          shift_res = std::numeric_limits<double>::infinity();
          if (first_failure.empty()) first_failure = "n = " + std::to_string(n) + ": spectrum";
        } else {
          const double res = std::abs(diff.changed[0].second - diff.changed[0].first - 2.0);
          shift_res = std::max(shift_res, res);
          if (res > kShiftTol) shift_ok = false;
        }

        for (int k = 1; k <= n - 2; ++k) {
          SpectralOptions opts;
          opts.level = k;
          opts.which = fam.which;
          opts.snap = 0.0;
          const DenseMatrix d = spectral_tokens(e1, opts).tokens - spectral_tokens(e2, opts).tokens;
          token_res = std::max(token_res, d.cwiseAbs().maxCoeff());
        }

        const std::int64_t delta = triangle_count(pair.g2) - triangle_count(pair.g1);
        if (delta != n - 2) {
          triangles_ok = false;
          if (first_failure.empty()) first_failure = "n = " + std::to_string(n) + ": triangles";
        }
      }
      const std::string prefix = std::string("t1.") + fam.label;
      const std::string sweep = "n in [" + std::to_string(config_.twin_min_n) + ", " +
                                std::to_string(config_.twin_max_n) + "]";
      check(prefix + ".eigen_shift", [&](CheckResult& r) {
        r.residual = shift_res;
        r.pass = shift_ok;
        r.detail = sweep + (first_failure.empty() ? "" : "; first failure " + first_failure);
      });
      check(prefix + ".truncated_tokens", [&](CheckResult& r) {
        r.residual = token_res;
        r.pass = token_res <= kTokenTol;
        r.detail = sweep + ", k <= n-2, " + to_string(fam.which);
      });
      check(prefix + ".triangle_delta", [&](CheckResult& r) {
        r.residual = triangles_ok ? 0.0 : 1.0;
        r.pass = triangles_ok;
        r.detail = sweep + ", expected delta n-2";
      });
    }
  }

  void run_lemma() {
    check("lemma.twin_edge", [&](CheckResult& r) {
      Rng rng = rng_for(CheckGroup::lemma);
      const double densities[] = {0.3, 0.5, 0.7};
      int pairs = 0;
      int failures = 0;
      for (int i = 0; i < config_.lemma_graphs; ++i) {
        const int n = uniform_int(rng, 3, config_.lemma_max_n);
        const Graph g = erdos_renyi(n, densities[i % 3], rng);
        for (const auto& [u, v] : find_twin_pairs(g)) {
          const TwinEdgeReport rep = verify_twin_edge_lemma(g, u, v, 1e-7);
          ++pairs;
          if (!rep.passed()) ++failures;
          r.residual = std::max(r.residual, rep.max_residual());
        }
      }
      r.pass = failures == 0 && r.residual < 1e-7;
      r.detail = std::to_string(pairs) + " twin pairs over " +
                 std::to_string(config_.lemma_graphs) + " graphs, " +
                 std::to_string(failures) + " failures";
    });
  }

  void run_t3() {
    check("t3.s5_gadget", [&](CheckResult& r) {
      Rng rng = rng_for(CheckGroup::t3_gadget);
      int disagreements = 0;
      int accepted = 0;
      int total = 0;
      for (int m : config_.s5_word_lengths) {
        for (int i = 0; i < config_.s5_instances; ++i) {
          std::vector<Permutation5> perms;
          for (int j = 0; j < m; ++j) perms.push_back(random_permutation5(rng));
          const int s = uniform_int(rng, 0, 4);
          const int t = uniform_int(rng, 0, 4);
          const WalkGadget gadget = s5_walk_gadget(perms, s, t);
          const bool by_trace = spanning_closed_walks(gadget) > 0;
          const bool by_composition = composition_maps(perms, s, t);
          if (by_trace != by_composition) ++disagreements;
          if (by_composition) ++accepted;
          ++total;
        }
      }
      r.residual = disagreements;
      r.pass = disagreements == 0;
      r.detail = std::to_string(total) + " instances (" + std::to_string(accepted) +
                 " accepted), " + std::to_string(disagreements) + " disagreements";
    });
  }

  void run_t5() {
    check("t5.disjointness_gadget", [&](CheckResult& r) {
      Rng rng = rng_for(CheckGroup::t5_gadget);
      int disagreements = 0;
      int total = 0;
      const auto evaluate = [&](const BitMatrix& a, const BitMatrix& b) {
        const bool has_triangle = triangle_count(disjointness_triangle_gadget(a, b)) > 0;
        if (has_triangle != disjointness_witness_exists(a, b)) ++disagreements;
        ++total;
      };
      const auto from_mask = [](int mask) {
        BitMatrix m(2);
        for (int bit = 0; bit < 4; ++bit) m.set(bit / 2, bit % 2, ((mask >> bit) & 1) != 0);
        return m;
      };
      for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) evaluate(from_mask(a), from_mask(b));
      }
      for (int n : config_.disjointness_sizes) {
        for (int i = 0; i < config_.disjointness_random; ++i) {
          const double density = uniform_real(rng, 0.0, 1.0);
          std::bernoulli_distribution bit(density);
          BitMatrix a(n);
          BitMatrix b(n);
          for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
              a.set(x, y, bit(rng));
              b.set(x, y, bit(rng));
            }
          }
          evaluate(a, b);
        }
      }
      r.residual = disagreements;
      r.pass = disagreements == 0;
      r.detail = std::to_string(total) + " instances, " + std::to_string(disagreements) +
                 " disagreements";
    });
  }

  void run_t7() {
    Rng rng = rng_for(CheckGroup::t7);
    double identity_res = 0.0;
    double fd_res = 0.0;
    int nodes = 0;
    for (int i = 0; i < config_.gradient_graphs; ++i) {
      const int n = uniform_int(rng, 2, config_.gradient_max_n);
      const Graph g = erdos_renyi(n, uniform_real(rng, 0.1, 0.9), rng);
      const EigenSystem es = laplacian_eigensystem(g);
      for (int v = 0; v < n; ++v) {
        const int u = (v + 1 + uniform_int(rng, 0, n - 2)) % n;
        const GradientReport rep = edge_gradient_check(g, es, u, v, config_.fd_step);
        const double d = rep.node_degree;
        const double scale = d * d + d + 1.0;
        identity_res = std::max(identity_res, rep.identity_residual / scale);
        identity_res = std::max(identity_res, std::abs(rep.laplacian_sq_diag - (d * d + d)) / scale);
        fd_res = std::max(fd_res, rep.fd_max_error);
        ++nodes;
      }
    }
    const std::string detail = std::to_string(config_.gradient_graphs) + " graphs, " +
                               std::to_string(nodes) + " nodes";
    check("t7.gradient_identity", [&](CheckResult& r) {
      r.residual = identity_res;
      r.pass = identity_res <= 1e-6;
      r.detail = detail + ", residual relative to d^2 + d + 1";
    });
    check("t7.finite_difference", [&](CheckResult& r) {
      r.residual = fd_res;
      r.pass = fd_res <= 1e-6;
      r.detail = detail + ", central differences";
    });
  }

  void run_detector() {
    check("rw_detector.oracle_agreement", [&](CheckResult& r) {
      Rng rng = rng_for(CheckGroup::rw_detector);
      int disagreements = 0;
      int subthreshold = 0;
      int detected = 0;
      for (int i = 0; i < config_.detector_graphs; ++i) {
        const int n = uniform_int(rng, 2, config_.detector_max_n);
        const int k = uniform_int(rng, 1, config_.detector_max_k);
        const Graph g = erdos_renyi(n, uniform_real(rng, 0.05, 0.6), rng);
        const DetectorResult det = rw_walk_detector(g, k);
        const auto walks = closed_walk_diagonal(g, k);
        bool any = false;
        for (int v = 0; v < n; ++v) {
          const bool exact = walks[v] > 0;
          any = any || exact;
          if (exact != det.node_detects[v]) ++disagreements;
        }
        if (any != det.graph_detects) ++disagreements;
        if (any) ++detected;
        subthreshold += det.subthreshold_nodes;
      }
      r.residual = disagreements + subthreshold;
      r.pass = disagreements == 0 && subthreshold == 0;
      r.detail = std::to_string(config_.detector_graphs) + " graphs (" + std::to_string(detected) +
                 " with a closed walk), " + std::to_string(disagreements) +
                 " disagreements, " + std::to_string(subthreshold) + " sub-threshold values";
    });
  }

  const SuiteConfig& config_;
  VerificationReport report_;
};

}  // namespace

VerificationReport run_verification_suite(const SuiteConfig& config) {
  return SuiteRunner(config).run();
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  auto checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (std::isfinite(c.residual)) {
      item["residual"] = c.residual;
    } else {
      item["residual"] = nullptr;
    }
    item["elapsed_ms"] = c.elapsed_ms;
    item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  j["overall"] = report.overall();
  return j;
}

}  // namespace graphtok
