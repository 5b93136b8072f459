#include "graphtok/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace graphtok {

namespace {

double max_abs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void apply_sign_convention(DenseMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double x = vectors(r, c);
      if (std::abs(x) > kTolSign) {
        if (x < 0) vectors.col(c) *= -1.0;
        break;
      }
    }
  }
}

// Replaces the columns [start, start + m) by a basis that depends only on
// their span. Candidates e_j are accepted in node order while their residual
// has squared norm >= 1/(4n); at least m candidates always qualify because
// the residual projector has trace m - (accepted so far).
void canonicalize_block(DenseMatrix& vectors, Eigen::Index start, Eigen::Index m) {
  const Eigen::Index n = vectors.rows();
  const DenseMatrix block = vectors.middleCols(start, m);
  const double min_sq = 1.0 / (4.0 * static_cast<double>(n));

  std::vector<Eigen::VectorXd> chosen;
  chosen.reserve(m);
  for (Eigen::Index j = 0; j < n && static_cast<Eigen::Index>(chosen.size()) < m; ++j) {
    Eigen::VectorXd c = block * block.row(j).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : chosen) c -= q * q.dot(c);
    }
    const double sq = c.squaredNorm();
    if (sq >= min_sq) chosen.push_back(c / std::sqrt(sq));
  }
  if (static_cast<Eigen::Index>(chosen.size()) != m) {
    throw EigenError("failed to build a canonical basis for a degenerate eigenspace");
  }
  for (Eigen::Index i = 0; i < m; ++i) vectors.col(start + m - 1 - i) = chosen[i];
}

}  // namespace

double inf_norm(const DenseMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

EigenSystem eigendecompose(const DenseMatrix& m, double tol_eig) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw EigenError("eigendecompose expects a non-empty square matrix");
  }
  if (!m.allFinite()) throw EigenError("matrix has non-finite entries");
  const double scale = std::max(1.0, inf_norm(m));
  const double asymmetry = max_abs(m - m.transpose());
  if (asymmetry > tol_eig * scale) {
    std::ostringstream os;
    os << "matrix is not symmetric: max |M - M^T| = " << asymmetry;
    throw EigenError(os.str());
  }

  const DenseMatrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "symmetric eigensolver did not converge (info = " << static_cast<int>(solver.info())
       << ")";
    throw EigenError(os.str());
  }

  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  const Eigen::Index n = es.values.size();

  const double group_tol = tol_eig * scale;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && es.values(end) - es.values(end - 1) <= group_tol) ++end;
    if (end - start > 1) canonicalize_block(es.vectors, start, end - start);
    start = end;
  }
  apply_sign_convention(es.vectors);

  const DenseMatrix residual = sym * es.vectors - es.vectors * es.values.asDiagonal();
  const double res = max_abs(residual);
  const double ortho = max_abs(es.vectors.transpose() * es.vectors - DenseMatrix::Identity(n, n));
  if (res > tol_eig * scale || ortho > tol_eig * scale) {
    std::ostringstream os;
    os << "eigendecomposition failed its accuracy check: residual " << res
       << ", orthonormality defect " << ortho;
    throw EigenError(os.str());
  }
  return es;
}

EigenSystem laplacian_eigensystem(const Graph& g, LaplacianKind kind, double tol_eig) {
  return eigendecompose(laplacian(g, kind), tol_eig);
}

SpectrumDiff compare_spectra(const Eigen::VectorXd& before, const Eigen::VectorXd& after,
                             double tol_match) {
  if (before.size() != after.size()) {
    throw std::invalid_argument("compare_spectra: dimension mismatch (" +
                                std::to_string(before.size()) + " vs " +
                                std::to_string(after.size()) + ")");
  }
  std::vector<double> a(before.data(), before.data() + before.size());
  std::vector<double> b(after.data(), after.data() + after.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  SpectrumDiff diff;
  std::vector<double> only_a;
  std::vector<double> only_b;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::abs(a[i] - b[j]) <= tol_match) {
      ++diff.matched;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      only_a.push_back(a[i++]);
    } else {
      only_b.push_back(b[j++]);
    }
  }
  only_a.insert(only_a.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  only_b.insert(only_b.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  for (std::size_t k = 0; k < only_a.size(); ++k) diff.changed.emplace_back(only_a[k], only_b[k]);
  return diff;
}

SpectrumDiff compare_spectra(const EigenSystem& before, const EigenSystem& after,
                             double tol_match) {
  return compare_spectra(before.values, after.values, tol_match);
}

double TwinEdgeReport::max_residual() const {
  return std::max({eigvec_residual_before, eigvec_residual_after, shift_residual});
}

TwinEdgeReport verify_twin_edge_lemma(const Graph& g, int u, int v, double tol) {
  if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw std::invalid_argument("twin-edge lemma needs two distinct nodes in range");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("twin-edge lemma: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") is already an edge");
  }

  TwinEdgeReport report;
  report.twins = g.neighbors(u) == g.neighbors(v);
  if (!report.twins) return report;
  const int d = g.degree(u);
  report.degree = d;

  const Graph after = with_edge(g, u, v);
  const DenseMatrix l1 = laplacian(g);
  const DenseMatrix l2 = laplacian(after);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(g.n());
  x(u) = 1.0;
  x(v) = -1.0;
  report.eigvec_residual_before = (l1 * x - d * x).cwiseAbs().maxCoeff();
  report.eigvec_residual_after = (l2 * x - (d + 2.0) * x).cwiseAbs().maxCoeff();
  report.eigenvector_ok =
      report.eigvec_residual_before <= tol && report.eigvec_residual_after <= tol;

  report.spectrum = compare_spectra(eigendecompose(l1), eigendecompose(l2), tol);
  if (report.spectrum.changed.size() == 1) {
    const auto [old_value, new_value] = report.spectrum.changed.front();
    report.shift_residual = std::max(std::abs(old_value - d), std::abs(new_value - (d + 2.0)));
  } else {
    report.shift_residual = std::numeric_limits<double>::infinity();
  }
  report.spectrum_ok = report.shift_residual <= tol;

  report.triangle_delta = triangle_count(after) - triangle_count(g);
  report.triangles_ok = report.triangle_delta == d;
  return report;
}

std::vector<std::pair<int, int>> find_twin_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v)) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

}  // namespace graphtok
