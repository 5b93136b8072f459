#include "graphtok/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

namespace graphtok {

namespace {

std::string describe(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.u << ", " << e.v << ")";
  return os.str();
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) {
    throw GraphError("graph must have at least one node, got n = " + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge " + describe(e) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("edge " + describe(e) + " is a self-loop");
    }
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  auto d = degrees();
  std::sort(d.begin(), d.end());
  return d;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph with_edge(const Graph& g, int u, int v) {
  std::vector<Edge> edges = g.edges();
  edges.push_back({u, v});
  return Graph(g.n(), edges);
}

Graph without_edge(const Graph& g, int u, int v) {
  const Edge target = u < v ? Edge{u, v} : Edge{v, u};
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e != target) edges.push_back(e);
  }
  return Graph(g.n(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) {
    throw GraphError("permutation size does not match node count");
  }
  std::vector<bool> seen(g.n(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.n() || seen[p]) throw GraphError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.n(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const int> nodes) {
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(static_cast<int>(nodes.size()), edges);
}

DenseMatrix adjacency(const Graph& g) {
  DenseMatrix a = DenseMatrix::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

DenseMatrix degree_matrix(const Graph& g) {
  DenseMatrix d = DenseMatrix::Zero(g.n(), g.n());
  for (int v = 0; v < g.n(); ++v) d(v, v) = g.degree(v);
  return d;
}

DenseMatrix laplacian(const Graph& g, LaplacianKind kind) {
  if (kind == LaplacianKind::combinatorial) return degree_matrix(g) - adjacency(g);

  Eigen::VectorXd inv_sqrt(g.n());
  for (int v = 0; v < g.n(); ++v) {
    inv_sqrt(v) = g.degree(v) > 0 ? 1.0 / std::sqrt(static_cast<double>(g.degree(v))) : 0.0;
  }
  DenseMatrix l = DenseMatrix::Identity(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    const double w = inv_sqrt(e.u) * inv_sqrt(e.v);
    l(e.u, e.v) = -w;
    l(e.v, e.u) = -w;
  }
  return l;
}

DenseMatrix transition_matrix(const Graph& g) {
  DenseMatrix p = DenseMatrix::Zero(g.n(), g.n());
  for (int v = 0; v < g.n(); ++v) {
    const double d = std::max(1, g.degree(v));
    for (int w : g.neighbors(v)) p(v, w) = 1.0 / d;
  }
  return p;
}

IntMatrix integer_adjacency(const Graph& g) {
  IntMatrix a = IntMatrix::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &term) ||
            __builtin_add_overflow(c(i, j), term, &c(i, j))) {
          throw std::overflow_error("integer matrix product overflows int64");
        }
      }
    }
  }
  return c;
}

std::int64_t triangle_count(const Graph& g) {
  const IntMatrix a = integer_adjacency(g);
  const IntMatrix a3 = checked_multiply(checked_multiply(a, a), a);
  const std::int64_t by_trace = a3.trace() / 6;

  // Each triangle u < v < w is counted once from its smallest edge (u, v).
  std::int64_t by_enumeration = 0;
  for (const Edge& e : g.edges()) {
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    auto iu = std::upper_bound(nu.begin(), nu.end(), e.v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), e.v);
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        ++by_enumeration;
        ++iu;
        ++iv;
      }
    }
  }
  if (by_trace != by_enumeration) {
    throw std::logic_error("triangle count mismatch: trace gives " + std::to_string(by_trace) +
                           ", enumeration gives " + std::to_string(by_enumeration));
  }
  return by_trace;
}

std::vector<std::int64_t> closed_walk_diagonal(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("walk length must be >= 1, got " + std::to_string(k));
  const IntMatrix a = integer_adjacency(g);
  IntMatrix power = a;
  try {
    for (int i = 1; i < k; ++i) power = checked_multiply(power, a);
  } catch (const std::overflow_error&) {
    throw std::overflow_error("closed walk counts overflow int64 at walk length k = " +
                              std::to_string(k));
  }
  std::vector<std::int64_t> diag(g.n());
  for (int v = 0; v < g.n(); ++v) diag[v] = power(v, v);
  return diag;
}

DisjointSet::DisjointSet(int n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

std::vector<int> connected_components(const Graph& g) {
  DisjointSet dsu(g.n());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  std::vector<int> root_id(g.n(), -1);
  std::vector<int> comp(g.n());
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int r = dsu.find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    comp[v] = root_id[r];
  }
  return comp;
}

bool is_connected(const Graph& g) {
  DisjointSet dsu(g.n());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  const bool by_union_find = dsu.components() == 1;

  std::vector<bool> seen(g.n(), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  const bool by_traversal = reached == g.n();
  if (by_union_find != by_traversal) {
    throw std::logic_error("connectivity mismatch between union-find and traversal");
  }
  return by_union_find;
}

}  // namespace graphtok
