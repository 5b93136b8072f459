#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace graphtok {

/// Dense real matrix used for every matrix view of a graph (A, D, L, P, powers).
using DenseMatrix = Eigen::MatrixXd;

/// Exact integer matrix for walk counting.
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for structurally invalid graph input (bad endpoint, self-loop, n < 1).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on nodes 0..n-1.
///
/// The edge list is canonical: each edge is stored with u < v and the list is
/// sorted lexicographically, so equal graphs compare and serialize identically.
/// Instances are immutable once constructed.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbour list of `v`.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  /// Degrees indexed by node.
  std::vector<int> degrees() const;
  /// Degrees sorted ascending (the relabeling-invariant degree sequence).
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Validating constructor; duplicate and reversed pairs collapse to one edge.
Graph build_graph(int n, std::span<const Edge> edges);

/// Copy of `g` with the edge (u, v) added (no-op if present).
Graph with_edge(const Graph& g, int u, int v);
/// Copy of `g` with the edge (u, v) removed (no-op if absent).
Graph without_edge(const Graph& g, int u, int v);
/// Relabels node i as perm[i].
Graph relabel(const Graph& g, std::span<const int> perm);
/// Induced subgraph on `nodes`, relabeled 0..|nodes|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> nodes);

enum class LaplacianKind { combinatorial, sym_normalized };

DenseMatrix adjacency(const Graph& g);
DenseMatrix degree_matrix(const Graph& g);
/// L = D - A, or I - D^{-1/2} A D^{-1/2}. Zero-degree nodes use a zero
/// D^{-1/2} entry, so their row is the identity row.
DenseMatrix laplacian(const Graph& g, LaplacianKind kind = LaplacianKind::combinatorial);
/// P = D^{-1} A with isolated-node degrees clamped to 1 (their rows are zero).
DenseMatrix transition_matrix(const Graph& g);

IntMatrix integer_adjacency(const Graph& g);
/// Exact product; throws std::overflow_error if any entry leaves int64 range.
IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b);

/// Number of triangles. Computed as Tr(A^3)/6 and by neighbour-set
/// intersection; a disagreement throws std::logic_error.
std::int64_t triangle_count(const Graph& g);

/// (A^k)_{vv} for every v, exact. Throws std::overflow_error naming k.
std::vector<std::int64_t> closed_walk_diagonal(const Graph& g, int k);

/// Disjoint-set union with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

/// Component id per node, ids assigned in order of smallest member.
std::vector<int> connected_components(const Graph& g);

/// Single connected component. Union-find result cross-checked by BFS.
bool is_connected(const Graph& g);

}  // namespace graphtok
