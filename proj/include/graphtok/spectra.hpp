#pragma once

#include <utility>
#include <vector>

#include "graphtok/graph.hpp"

namespace graphtok {

inline constexpr double kDefaultTolEig = 1e-9;
inline constexpr double kDefaultTolMatch = 1e-7;
inline constexpr double kTolSign = 1e-12;

/// Ascending eigenvalues with orthonormal eigenvectors (column i pairs with
/// values[i]).
///
/// Conventions:
///  - in each column the first coordinate with |x| > kTolSign is positive;
///  - inside a degenerate block the basis is the Gram-Schmidt
///    orthonormalization of the projections of e_0, e_1, ... onto the
///    eigenspace, so it depends only on the eigenspace and the node order.
///    The first vector produced occupies the highest column of the block.
struct EigenSystem {
  Eigen::VectorXd values;
  DenseMatrix vectors;

  int size() const { return static_cast<int>(values.size()); }
};

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense symmetric eigendecomposition. Throws EigenError for asymmetric or
/// non-finite input and when the result misses the residual bound
/// ||M u_i - l_i u_i||_inf <= tol_eig * max(1, ||M||_inf).
EigenSystem eigendecompose(const DenseMatrix& m, double tol_eig = kDefaultTolEig);

EigenSystem laplacian_eigensystem(const Graph& g,
                                  LaplacianKind kind = LaplacianKind::combinatorial,
                                  double tol_eig = kDefaultTolEig);

/// Row-sum norm.
double inf_norm(const DenseMatrix& m);

struct SpectrumDiff {
  int matched = 0;
  /// (old, new) eigenvalues left unmatched, ascending.
  std::vector<std::pair<double, double>> changed;
};

/// Greedy two-pointer matching of the sorted spectra within `tol_match`.
/// Unmatched eigenvalues of each side are paired in ascending order.
SpectrumDiff compare_spectra(const Eigen::VectorXd& before, const Eigen::VectorXd& after,
                             double tol_match = kDefaultTolMatch);
SpectrumDiff compare_spectra(const EigenSystem& before, const EigenSystem& after,
                             double tol_match = kDefaultTolMatch);

/// Outcome of checking the twin-edge lemma on (G, u, v).
struct TwinEdgeReport {
  bool twins = false;  ///< N(u) == N(v)
  int degree = 0;      ///< common degree d (meaningful when twins)
  /// max-abs residuals of L1 x - d x and L2 x - (d+2) x, x = e_u - e_v
  double eigvec_residual_before = 0.0;
  double eigvec_residual_after = 0.0;
  SpectrumDiff spectrum;
  /// |changed eigenvalue pair - (d, d+2)|, infinity if not exactly one change
  double shift_residual = 0.0;
  std::int64_t triangle_delta = 0;

  bool eigenvector_ok = false;
  bool spectrum_ok = false;
  bool triangles_ok = false;

  bool passed() const { return twins && eigenvector_ok && spectrum_ok && triangles_ok; }
  double max_residual() const;
};

/// Throws std::invalid_argument if u == v, out of range, or (u, v) is an edge.
TwinEdgeReport verify_twin_edge_lemma(const Graph& g, int u, int v,
                                      double tol = kDefaultTolMatch);

/// All non-adjacent pairs u < v with N(u) == N(v).
std::vector<std::pair<int, int>> find_twin_pairs(const Graph& g);

}  // namespace graphtok
