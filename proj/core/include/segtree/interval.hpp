#pragma once

#include <cstdint>
#include <vector>

namespace segtree {

/// A coordinate interval [l, r] with l <= r. Degenerate (l == r) intervals
/// are representable but never inserted into a tree.
struct Interval {
  double l = 0.0;
  double r = 0.0;

  bool degenerate() const { return l == r; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Multiset of intervals; duplicates are meaningful.
using IntervalSet = std::vector<Interval>;

/// An interval of endpoint indices, 0 <= b <= e <= N. The tree-internal
/// form of an interval: it denotes the half-open coordinate range
/// (x[b], x[e]].
struct IndexInterval {
  std::uint64_t b = 0;
  std::uint64_t e = 0;

  bool degenerate() const { return b == e; }
  friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

/// Sorted endpoint universe x[0..N], non-decreasing, duplicates preserved.
using EndpointArray = std::vector<double>;

}  // namespace segtree
