#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "segtree/interval.hpp"

// Structural algebra of the implicit heap layout.
//
// A nearly complete binary tree over N elementary intervals is stored
// breadth-first in a flat array indexed 1..2N-1; the N leaves occupy
// slots N..2N-1, leaf N+i covering elementary interval (x[i], x[i+1]].
// No node stores any structural field: height, endpoint range and node
// classification are all computed from the node number and N alone,
// using integer bit operations only.

namespace segtree::layout {

using NodeIndex = std::uint64_t;
using UniverseSize = std::uint64_t;

enum class NodeKind {
  C,     // subtree rooted here is a complete binary tree
  Y,     // subtree is nearly complete but not complete
  Leaf,  // height-0 C node, index in [N, 2N-1]
};

/// Index-space coverage of a node: one contiguous index interval for a
/// C node, two disjoint ones for a Y node, in ascending order.
struct StandardRegion {
  std::array<IndexInterval, 2> pieces{};
  int count = 0;

  friend bool operator==(const StandardRegion& a, const StandardRegion& b) {
    if (a.count != b.count) return false;
    for (int i = 0; i < a.count; ++i)
      if (!(a.pieces[i] == b.pieces[i])) return false;
    return true;
  }
};

inline void check_node(NodeIndex x, UniverseSize n) {
  if (x < 1 || x > 2 * n - 1)
    throw std::out_of_range("node index " + std::to_string(x) +
                            " outside [1, " + std::to_string(2 * n - 1) + "]");
}

/// t(N): number of trailing zero bits of N.
constexpr int trailing_zeros(UniverseSize n) { return std::countr_zero(n); }

/// y(N) = floor(N / 2^(1+t(N))), the lowest Y node; 0 means there is none
/// (N a power of two). Equals the longest common binary prefix of N and N-1.
constexpr NodeIndex lowest_y_node(UniverseSize n) {
  return n >> (1 + std::countr_zero(n));
}

/// h(x): height of the subtree rooted at x, i.e. the smallest k >= 0 with
/// x * 2^k >= N. The leftmost-descendant chain x, 2x, 4x, ... reaches the
/// leaf row exactly when it passes N.
inline int height(NodeIndex x, UniverseSize n) {
  check_node(x, n);
  if (x >= n) return 0;
  return std::bit_width((n - 1) / x);
}

inline NodeKind node_kind(NodeIndex x, UniverseSize n) {
  check_node(x, n);
  if (x >= n) return NodeKind::Leaf;
  const NodeIndex y = lowest_y_node(n);
  if (y == 0) return NodeKind::C;  // complete tree, no Y nodes
  const int dx = std::bit_width(x);
  const int dy = std::bit_width(y);
  // Y nodes are exactly the binary prefixes of y(N).
  if (dx > dy) return NodeKind::C;
  return (y >> (dy - dx)) == x ? NodeKind::Y : NodeKind::C;
}

/// l(x) - N: index of the left end of the node's range. The leftmost leaf
/// of the subtree is l(x) = x * 2^h(x).
inline std::uint64_t left_end(NodeIndex x, UniverseSize n) {
  return (x << height(x, n)) - n;
}

/// Right end of the node's range: r(x) - N + 1 for a C node; for a Y node
/// the height is reduced by one, giving r'(x) - N + 1, the end of its
/// first (wrapped-around) piece.
inline std::uint64_t right_end(NodeIndex x, UniverseSize n) {
  int h = height(x, n);
  if (node_kind(x, n) == NodeKind::Y) --h;
  return ((x + 1) << h) - n;
}

inline StandardRegion standard_region(NodeIndex x, UniverseSize n) {
  StandardRegion region;
  const std::uint64_t le = left_end(x, n);
  const std::uint64_t re = right_end(x, n);
  if (node_kind(x, n) == NodeKind::Y) {
    region.pieces[0] = IndexInterval{0, re};
    region.pieces[1] = IndexInterval{le, n};
    region.count = 2;
  } else {
    region.pieces[0] = IndexInterval{le, re};
    region.count = 1;
  }
  return region;
}

}  // namespace segtree::layout
