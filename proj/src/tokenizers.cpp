#include "graphtok/tokenizers.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

namespace graphtok {

std::string to_string(TokenFamily f) {
  switch (f) {
    case TokenFamily::spectral: return "spectral";
    case TokenFamily::random_walk: return "rw";
    case TokenFamily::adjacency: return "adjacency";
    case TokenFamily::adjacency_projected: return "adjacency_projected";
    case TokenFamily::combined: return "combined";
  }
  return "unknown";
}

std::string to_string(EigenSelection s) {
  return s == EigenSelection::smallest ? "smallest" : "largest";
}

std::string to_string(LaplacianKind k) {
  return k == LaplacianKind::combinatorial ? "combinatorial" : "sym_normalized";
}

TokenMatrix spectral_tokens(const Graph& g, const SpectralOptions& opts) {
  return spectral_tokens(laplacian_eigensystem(g, opts.kind), opts);
}

TokenMatrix spectral_tokens(const EigenSystem& es, const SpectralOptions& opts) {
  const int n = es.size();
  const int first_available = opts.drop_trivial ? 1 : 0;
  const int available = n - first_available;
  const int k = opts.level.value_or(available);
  if (k < 1 || k > available) {
    throw std::invalid_argument("spectral level k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(available) + "]");
  }
  const int first =
      opts.which == EigenSelection::smallest ? first_available : first_available + available - k;

  TokenMatrix t;
  t.family = TokenFamily::spectral;
  t.params.level = opts.level;
  t.params.laplacian_kind = opts.kind;
  t.params.which = opts.which;
  t.params.drop_trivial = opts.drop_trivial;
  t.tokens.resize(n, 2 * k);
  t.tokens.leftCols(k) = es.vectors.middleCols(first, k);
  const Eigen::RowVectorXd lambdas = es.values.segment(first, k).transpose();
  t.tokens.rightCols(k) = lambdas.replicate(n, 1);
  if (opts.snap > 0.0) {
    // +0.0 folds negative zero.
    t.tokens = t.tokens.unaryExpr(
        [s = opts.snap](double x) { return std::nearbyint(x / s) * s + 0.0; });
  }
  return t;
}

TokenMatrix rw_tokens(const Graph& g, int walk_length) {
  if (walk_length < 1) {
    throw std::invalid_argument("walk length t must be >= 1, got " + std::to_string(walk_length));
  }
  const DenseMatrix p = transition_matrix(g);
  TokenMatrix t;
  t.family = TokenFamily::random_walk;
  t.params.walk_length = walk_length;
  t.tokens.resize(g.n(), walk_length);
  DenseMatrix power = p;
  for (int i = 0; i < walk_length; ++i) {
    if (i > 0) power = power * p;
    t.tokens.col(i) = power.diagonal();
  }
  return t;
}

TokenMatrix adjacency_tokens(const Graph& g) {
  TokenMatrix t;
  t.family = TokenFamily::adjacency;
  t.tokens = adjacency(g);
  return t;
}

std::shared_ptr<const DenseMatrix> projection_matrix(int n, int d_tr, std::uint64_t seed) {
  if (n < 1 || d_tr < 1) throw std::invalid_argument("projection needs n >= 1 and d_tr >= 1");
  using Key = std::tuple<int, int, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const DenseMatrix>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[Key{n, d_tr, seed}];
  if (!slot) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto r = std::make_shared<DenseMatrix>(n, d_tr);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d_tr; ++j) (*r)(i, j) = normal(rng);
    }
    slot = std::move(r);
  }
  return slot;
}

TokenMatrix adjacency_projected_tokens(const Graph& g, int d_tr, std::uint64_t seed) {
  TokenMatrix t = adjacency_projected_tokens(g, *projection_matrix(g.n(), d_tr, seed));
  t.params.projection_seed = seed;
  return t;
}

TokenMatrix adjacency_projected_tokens(const Graph& g, const DenseMatrix& projection) {
  if (projection.rows() != g.n() || projection.cols() < 1) {
    throw std::invalid_argument("projection must have n rows and at least one column");
  }
  TokenMatrix t;
  t.family = TokenFamily::adjacency_projected;
  t.params.projection_dim = static_cast<int>(projection.cols());
  t.tokens = adjacency(g) * projection;
  return t;
}

TokenMatrix combined_tokens(std::span<const TokenMatrix> parts) {
  if (parts.empty()) throw std::invalid_argument("combined_tokens needs at least one part");
  const int rows = parts.front().rows();
  int width = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) {
      throw std::invalid_argument("combined_tokens: row count mismatch (" + std::to_string(rows) +
                                  " vs " + std::to_string(p.rows()) + ")");
    }
    width += p.width();
  }
  TokenMatrix t;
  t.family = TokenFamily::combined;
  t.tokens.resize(rows, width);
  int col = 0;
  for (const auto& p : parts) {
    t.tokens.middleCols(col, p.width()) = p.tokens;
    col += p.width();
    t.params.parts.push_back(p.family);
  }
  return t;
}

TokenMatrix pad_tokens(const TokenMatrix& t, int target_width) {
  if (target_width < t.width()) {
    throw std::invalid_argument("pad target width " + std::to_string(target_width) +
                                " is smaller than current width " + std::to_string(t.width()));
  }
  TokenMatrix out = t;
  out.tokens = DenseMatrix::Zero(t.rows(), target_width);
  out.tokens.leftCols(t.width()) = t.tokens;
  out.params.padded_width = target_width;
  return out;
}

}  // namespace graphtok
