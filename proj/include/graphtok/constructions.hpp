#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphtok/graph.hpp"

namespace graphtok {

/// Seedable generator used by every randomized construction.
using Rng = std::mt19937_64;

/// Raised when a construction's preconditions do not hold.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Godsil-McKay switching
// ---------------------------------------------------------------------------

/// A validated switching set: the induced subgraph on `members` is
/// `internal_degree`-regular and every other node has 0, |S|/2 or |S|
/// neighbours in S (recorded in `outside_profile`).
struct SwitchingSet {
  std::vector<int> members;  // sorted
  int internal_degree = 0;
  std::map<int, int> outside_profile;
};

/// Throws ConstructionError naming the violating node or condition.
SwitchingSet validate_switching_set(const Graph& g, std::span<const int> members);

/// Complements the edges into S of every outside node with |S|/2 neighbours
/// in S. Re-checks `s` against `g` first; a stale set throws ConstructionError.
Graph gm_switch(const Graph& g, const SwitchingSet& s);

// ---------------------------------------------------------------------------
// Gadget pairs
// ---------------------------------------------------------------------------

enum class DeltaKind { planarity_flip, eigenvalue_shift };

/// What a pair is claimed to differ in.
struct ClaimedDelta {
  DeltaKind kind = DeltaKind::planarity_flip;
  double eigenvalue_before = 0.0;  ///< eigenvalue_shift only
  double eigenvalue_after = 0.0;
  std::int64_t triangle_delta = 0;
};

struct GadgetPair {
  Graph g1;
  Graph g2;
  std::string label;
  ClaimedDelta claimed;
  int twin_u = -1;  ///< twin pairs: g2 = g1 + (twin_u, twin_v)
  int twin_v = -1;
  std::vector<int> switching_set;  ///< GM pair: S
};

/// The 12-node planar graph and its GM switch. Node order: s1..s4 (0-3),
/// u1..u6 (4-9), x1, x2 (10, 11); S = {0, 1, 2, 3}.
GadgetPair planar_gm_pair();

/// g1 = K_{2,n-2} with twins 0 and 1 first; g2 adds the edge (0, 1).
/// The shifted eigenvalue is d = n-2 -> n. Requires n >= 5.
GadgetPair bipartite_twin_pair(int n);

/// g1 = join(K_{n-2}, two isolated nodes): clique on 0..n-3, twins n-2 and
/// n-1 last; g2 adds the twin edge (so g2 = K_n). Shift n-2 -> n. n >= 5.
GadgetPair clique_join_twin_pair(int n);

// ---------------------------------------------------------------------------
// Permutation word gadget
// ---------------------------------------------------------------------------

using Permutation5 = std::array<int, 5>;

/// Layered graph encoding a word sigma_1 ... sigma_m over S_5.
///
/// Layers V_0..V_m hold 5 nodes each (node(layer, i) = 5 * layer + i).
/// sigma_l is a perfect matching between V_{l-1} and V_l (i ~ sigma_l(i)),
/// and one closing edge joins node s of V_0 to node t of V_m. The closing
/// edge and the matchings form a closed walk of `spanning_length` = m + 1
/// through s iff sigma_m(...sigma_1(s)) = t.
struct WalkGadget {
  Graph graph;
  int layers = 0;
  int spanning_length = 0;
  int source = 0;  ///< node s in V_0
  int target = 0;  ///< node t in V_m

  int node(int layer, int index) const { return 5 * layer + index; }
};

/// Needs at least 2 permutations, each a bijection of {0..4}; s, t in [0, 5).
WalkGadget s5_walk_gadget(std::span<const Permutation5> perms, int s, int t);

/// Closed walks of length `spanning_length` at `source` that advance one
/// layer per step (matchings oriented V_{l-1} -> V_l, closing edge V_m -> V_0),
/// counted as the diagonal entry of the oriented adjacency power.
std::int64_t spanning_closed_walks(const WalkGadget& gadget);

/// Direct evaluation: does sigma_m o ... o sigma_1 map s to t?
bool composition_maps(std::span<const Permutation5> perms, int s, int t);

Permutation5 random_permutation5(Rng& rng);

// ---------------------------------------------------------------------------
// Set-disjointness triangle gadget
// ---------------------------------------------------------------------------

/// Square 0/1 matrix.
struct BitMatrix {
  int size = 0;
  std::vector<std::uint8_t> bits;

  BitMatrix() = default;
  explicit BitMatrix(int n) : size(n), bits(static_cast<std::size_t>(n) * n, 0) {}
  bool at(int i, int j) const { return bits[static_cast<std::size_t>(i) * size + j] != 0; }
  void set(int i, int j, bool value) {
    bits[static_cast<std::size_t>(i) * size + j] = value ? 1 : 0;
  }
};

/// 3n nodes: V1 = 0..n-1, V2 = n..2n-1, V3 = 2n..3n-1. a(i, j) joins V1_i to
/// V2_j, b(j, i) joins V2_j to V3_i, and V1_i ~ V3_i for every i.
Graph disjointness_triangle_gadget(const BitMatrix& a, const BitMatrix& b);

/// True iff a(i, j) * b(j, i) = 1 for some (i, j).
bool disjointness_witness_exists(const BitMatrix& a, const BitMatrix& b);

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

/// G(n, p): each pair independently with probability p.
Graph erdos_renyi(int n, double p, Rng& rng);

/// Two ER(n/2, p) halves (nodes 0..n/2-1 and n/2..n-1), each regenerated
/// until connected. connected = true adds 3 distinct random edges across the
/// halves; otherwise 3 new edges are placed inside randomly chosen halves.
/// Throws ConstructionError once `max_attempts` is exhausted.
Graph bridge_pair_graph(int n, double p, bool connected, Rng& rng, int max_attempts = 1000);

}  // namespace graphtok
