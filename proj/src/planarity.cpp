#include "graphtok/planarity.hpp"

#include <algorithm>

namespace graphtok {

namespace {

constexpr int kNone = -1;

// Left-right planarity criterion (Brandes' formulation of de Fraysseix and
// Rosenstiehl). Edge ids are undirected edge indices; each edge is oriented
// once during the first DFS and keeps that id.
class LeftRightTester {
 public:
  explicit LeftRightTester(const Graph& g)
      : g_(g),
        m_(static_cast<int>(g.num_edges())),
        incident_(g.n()),
        src_(m_, kNone),
        dst_(m_, kNone),
        height_(g.n(), kNone),
        parent_edge_(g.n(), kNone),
        lowpt_(m_, 0),
        lowpt2_(m_, 0),
        nesting_depth_(m_, 0),
        out_(g.n()),
        ref_(m_, kNone),
        lowpt_edge_(m_, kNone),
        stack_bottom_(m_, kNone) {
    const auto& edges = g.edges();
    for (int id = 0; id < m_; ++id) {
      incident_[edges[id].u].push_back({edges[id].v, id});
      incident_[edges[id].v].push_back({edges[id].u, id});
    }
  }

  bool planar() {
    std::vector<int> roots;
    for (int v = 0; v < g_.n(); ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (auto& out : out_) {
      std::stable_sort(out.begin(), out.end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    for (int r : roots) {
      if (!test(r)) return false;
    }
    return true;
  }

 private:
  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    int id = kNone;
    void swap() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int edge) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[edge];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  void push(ConflictPair p) {
    if (p.id == kNone) p.id = next_pair_id_++;
    stack_.push_back(p);
  }

  ConflictPair pop() {
    ConflictPair p = stack_.back();
    stack_.pop_back();
    return p;
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (const auto& [w, id] : incident_[v]) {
      if (src_[id] != kNone) continue;
      src_[id] = v;
      dst_[id] = w;
      out_[v].push_back(id);
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[id] = height_[w];
      }

      nesting_depth_[id] = 2 * lowpt_[id];
      if (lowpt2_[id] < height_[v]) ++nesting_depth_[id];

      if (e != kNone) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& out = out_[v];
    for (int ei : out) {
      const int w = dst_[ei];
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        push(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (ei == out.front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = pop();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top_id() != stack_bottom_[ei]);

    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = pop();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) push(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) pop();
    if (!stack_.empty()) {
      ConflictPair p = pop();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      push(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const Graph& g_;
  int m_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::vector<int> src_;
  std::vector<int> dst_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_depth_;
  std::vector<std::vector<int>> out_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<int> stack_bottom_;
  std::vector<ConflictPair> stack_;
  int next_pair_id_ = 0;
};

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
  const long n = g.n();
  const long m = static_cast<long>(g.num_edges());
  if (n <= 4) return {true, "small-order", false};
  if (m > 3 * n - 6) return {false, "edge-bound", true};
  LeftRightTester tester(g);
  return {tester.planar(), "left-right", false};
}

}  // namespace graphtok
