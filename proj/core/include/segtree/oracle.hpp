#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "segtree/interval.hpp"

// Brute-force references for differential testing. Definitionally slow
// (O(n*N) or worse) and deliberately independent of the layout math and
// tree implementations they are used to check. All half-open: an interval
// [l, r] contains q iff l < q <= r.

namespace segtree::oracle {

/// Linear-scan stabbing count: |{ [l, r] in s : l < q <= r }|.
std::int64_t oracle_stab(const IntervalSet& s, double q);

/// Measure of the union of s, by summing covered elementary intervals.
double oracle_union(const IntervalSet& s);

/// Maximum over q of the stabbing count, by sweeping elementary intervals.
std::int64_t oracle_clique(const IntervalSet& s);

/// Nearly complete binary tree with everything stored explicitly; the
/// ground truth the implicit layout is checked against.
struct ExplicitNode {
  int depth = 0;
  int height = 0;
  bool complete = false;
  std::vector<std::uint64_t> elems;     // elementary indices of leaf descendants
  std::vector<IndexInterval> region;    // maximal runs of elems, as [lo, hi]
};

struct ExplicitTree {
  std::uint64_t n = 0;
  std::vector<ExplicitNode> nodes;  // 1-based; slot 0 unused

  const ExplicitNode& at(std::uint64_t v) const { return nodes[v]; }
};

/// Literal BFS construction; 2N-1 nodes, leaves N..2N-1.
ExplicitTree explicit_tree(std::uint64_t n);

/// Canonical covering of [b, e] in the heap layout: nodes whose region is
/// contained in [b, e] while the parent's is not, by exhaustive check over
/// all 2N-1 nodes. Ascending.
std::vector<std::uint64_t> oracle_covering(std::uint64_t n, std::uint64_t b,
                                           std::uint64_t e);

}  // namespace segtree::oracle
