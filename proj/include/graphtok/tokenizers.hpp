#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphtok/graph.hpp"
#include "graphtok/spectra.hpp"

namespace graphtok {

enum class TokenFamily { spectral, random_walk, adjacency, adjacency_projected, combined };
enum class EigenSelection { smallest, largest };

std::string to_string(TokenFamily f);
std::string to_string(EigenSelection s);
std::string to_string(LaplacianKind k);

/// Family-specific parameters; unused fields stay empty.
struct TokenParams {
  std::optional<int> level;  ///< spectral k (empty = full)
  std::optional<LaplacianKind> laplacian_kind;
  std::optional<EigenSelection> which;
  bool drop_trivial = false;
  std::optional<int> walk_length;  ///< random-walk t
  std::optional<int> projection_dim;
  std::optional<std::uint64_t> projection_seed;
  std::optional<int> padded_width;
  std::vector<TokenFamily> parts;  ///< combined: families in concatenation order
};

/// n x d matrix of per-node tokens (row v is node v's token).
struct TokenMatrix {
  DenseMatrix tokens;
  TokenFamily family = TokenFamily::adjacency;
  TokenParams params;

  int rows() const { return static_cast<int>(tokens.rows()); }
  int width() const { return static_cast<int>(tokens.cols()); }
};

struct SpectralOptions {
  std::optional<int> level;  ///< empty: every eigenpair that survives drop_trivial
  LaplacianKind kind = LaplacianKind::combinatorial;
  EigenSelection which = EigenSelection::smallest;
  bool drop_trivial = false;  ///< remove the smallest eigenpair before selecting
  /// Entries are rounded to multiples of this step so that solver round-off
  /// does not leak into the output bytes. 0 keeps raw values.
  double snap = 0x1p-40;
};

/// Row v = (u_i1(v), ..., u_ik(v), l_i1, ..., l_ik) with the eigenpairs picked
/// by `which`, listed in ascending eigenvalue order. Width 2k; 2n when full.
TokenMatrix spectral_tokens(const Graph& g, const SpectralOptions& opts = {});
/// Same, reusing an eigensystem already computed for `opts.kind`.
TokenMatrix spectral_tokens(const EigenSystem& es, const SpectralOptions& opts = {});

/// Column i holds (P^{i+1})_{vv}, P = D^{-1}A, by repeated dense multiplication.
TokenMatrix rw_tokens(const Graph& g, int walk_length);

TokenMatrix adjacency_tokens(const Graph& g);

/// R in R^{n x d_tr} with i.i.d. N(0, 1) entries, generated once per
/// (n, d_tr, seed) and shared by every caller in the process.
std::shared_ptr<const DenseMatrix> projection_matrix(int n, int d_tr, std::uint64_t seed);

/// A R with the cached projection for (n, d_tr, seed).
TokenMatrix adjacency_projected_tokens(const Graph& g, int d_tr, std::uint64_t seed);
/// A R with a caller-supplied projection (n rows).
TokenMatrix adjacency_projected_tokens(const Graph& g, const DenseMatrix& projection);

/// Horizontal concatenation in the given order.
TokenMatrix combined_tokens(std::span<const TokenMatrix> parts);
/// Appends zero columns up to `target_width`.
TokenMatrix pad_tokens(const TokenMatrix& t, int target_width);

}  // namespace graphtok
