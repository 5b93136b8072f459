#pragma once

#include <string>

#include "graphtok/graph.hpp"

namespace graphtok {

struct PlanarityVerdict {
  bool planar = true;
  /// "left-right", "edge-bound" or "small-order"
  std::string method;
  /// Decided by |E| > 3n - 6 (implies planar == false).
  bool edge_bound_shortcut = false;
};

/// Left-right planarity test (one DFS orientation pass, one constraint pass
/// per component). Graphs with n <= 4 are planar; |E| > 3n - 6 is rejected
/// before the traversal.
PlanarityVerdict is_planar(const Graph& g);

}  // namespace graphtok
