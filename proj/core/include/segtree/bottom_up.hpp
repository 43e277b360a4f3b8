#pragma once

#include <cstdint>
#include <vector>

#include "segtree/heap_tree.hpp"

// Non-recursive strategy over the same HeapSegmentTree: leaf-anchored
// climbing insertion/deletion and bottom-up stabbing with a preliminary
// binary search. Payload effects are identical to the recursive strategy.

namespace segtree::bottom_up {

/// change(v, k) followed by update(v).
void modify(HeapSegmentTree& tree, std::uint64_t v, int k);

/// update applied at v, v/2, ..., 1. pushup(0) is a no-op.
void pushup(HeapSegmentTree& tree, std::uint64_t v);

void insert_iterative(HeapSegmentTree& tree, std::uint64_t b, std::uint64_t e);
void delete_iterative(HeapSegmentTree& tree, std::uint64_t b, std::uint64_t e);

/// Equals tree.stab_recursive(q): binary-search the leaf whose elementary
/// interval contains q, then climb summing counts until the first Y
/// ancestor (whose count is always zero) or past the root.
std::int64_t stab_iterative(const HeapSegmentTree& tree, double q);

/// The node set insert_iterative would assign for (b, e), ascending; pure.
std::vector<std::uint64_t> covering_iterative(std::uint64_t n,
                                              std::uint64_t b,
                                              std::uint64_t e);

}  // namespace segtree::bottom_up
