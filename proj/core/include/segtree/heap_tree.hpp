#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "segtree/interval.hpp"
#include "segtree/layout.hpp"

namespace segtree {

/// Signals a broken internal invariant (e.g. a count driven negative by
/// deleting a never-inserted interval).
class invariant_error : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Per-node record; the only storage the heap tree keeps per node.
struct NodePayload {
  std::int64_t cnt = 0;  // intervals assigned to this node
  std::int64_t clq = 0;  // max clique size within the subtree
  double uni = 0.0;      // measure of the union within the subtree

  friend bool operator==(const NodePayload&, const NodePayload&) = default;
};

/// Segment tree over a fixed endpoint universe x[0..N], stored as a flat
/// payload array indexed 1..2N-1 with zero structural metadata per node.
///
/// Elementary intervals are half-open: leaf N+i covers (x[i], x[i+1]],
/// so an inserted interval (b, e) covers the coordinate range (x[b], x[e]]
/// and a stabbing query at exactly q == x[b] does not count it.
///
/// Mutations require exclusive access; stab/union/clique queries are
/// read-only and may run concurrently with each other.
class HeapSegmentTree {
 public:
  /// Takes ownership of the endpoint array; requires x.size() >= 2 (N >= 1)
  /// and non-decreasing coordinates. Allocates 2N-1 zeroed payload slots;
  /// no traversal is performed.
  explicit HeapSegmentTree(EndpointArray x);

  std::uint64_t universe_size() const { return n_; }
  const EndpointArray& endpoints() const { return x_; }
  std::uint64_t payload_slot_count() const { return 2 * n_ - 1; }

  const NodePayload& payload(std::uint64_t v) const {
    layout::check_node(v, n_);
    return tree_[v];
  }
  /// Slots 1..2N-1 (element 0 of the span is node 1).
  std::span<const NodePayload> payloads() const {
    return {tree_.data() + 1, tree_.size() - 1};
  }

  /// cnt(v) += k, k in {+1, -1}; throws invariant_error if the count
  /// would go negative.
  void change(std::uint64_t v, int k);

  /// Recomputes (uni, clq) of v from cnt(v), the endpoints and the
  /// children. Children must already be consistent.
  void update(std::uint64_t v);

  // -- recursive (top-down) strategy --
  void insert_recursive(std::uint64_t b, std::uint64_t e);
  void delete_recursive(std::uint64_t b, std::uint64_t e);
  std::int64_t stab_recursive(double q) const;

  double union_measure() const { return tree_[1].uni; }
  std::int64_t max_clique() const { return tree_[1].clq; }

  /// Validates 0 <= b < e <= N and records (b, e) in the live multiset.
  /// Both insertion strategies go through here.
  void note_insert(std::uint64_t b, std::uint64_t e);
  /// Removes one occurrence of (b, e); throws std::invalid_argument when
  /// (b, e) is not currently live.
  void note_delete(std::uint64_t b, std::uint64_t e);
  std::uint64_t live_count() const { return live_total_; }

  // Node-visit instrumentation, shared by both strategies.
  void reset_visits() const { visits_ = 0; }
  std::uint64_t visits() const { return visits_; }
  void count_visit() const { ++visits_; }

 private:
  void apply(std::uint64_t v, std::uint64_t b, std::uint64_t e, int k);
  std::int64_t stab_node(std::uint64_t v, double q) const;

  EndpointArray x_;
  std::uint64_t n_;                           // N
  std::vector<NodePayload> tree_;             // slot 0 unused
  std::unordered_map<std::uint64_t, std::uint64_t> live_;  // (b<<32|e) -> count
  std::uint64_t live_total_ = 0;
  mutable std::uint64_t visits_ = 0;
};

/// The node set insert_recursive would assign for (b, e), in ascending
/// order; pure, needs no tree instance.
std::vector<std::uint64_t> covering_recursive(std::uint64_t n,
                                              std::uint64_t b,
                                              std::uint64_t e);

}  // namespace segtree
