#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace segtree {

/// Classic segment tree with explicitly linked nodes and stored structural
/// fields. Correctness baseline and benchmark comparator for the heap
/// implementation; maintains only per-node counts.
///
/// Single-writer: insert/remove require exclusive access.
class ReferenceTree {
 public:
  struct Node {
    std::uint64_t b = 0;       // span [b, e] in endpoint indices
    std::uint64_t e = 0;
    std::uint64_t key = 0;     // split point, non-leaf only
    std::uint64_t number = 0;  // heap-style diagnostic number (root 1)
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
    std::int64_t cnt = 0;

    bool is_leaf() const { return !left; }
  };

  /// Builds T(0, N); requires N >= 1.
  explicit ReferenceTree(std::uint64_t n);

  /// Builds T(s, t) with root numbered 1; requires s < t.
  static std::unique_ptr<Node> build(std::uint64_t s, std::uint64_t t);

  std::uint64_t universe_size() const { return n_; }
  const Node& root() const { return *root_; }
  std::uint64_t node_count() const { return 2 * n_ - 1; }

  /// Increments cnt on exactly the canonical covering nodes of [b, e].
  void insert(std::uint64_t b, std::uint64_t e);
  /// Exact inverse of insert; throws invariant_error if a count would go
  /// negative (the interval was never inserted).
  void remove(std::uint64_t b, std::uint64_t e);

  /// Diagnostic numbers of the canonical covering of [b, e], ascending.
  std::vector<std::uint64_t> canonical_covering(std::uint64_t b,
                                                std::uint64_t e) const;

  /// Sum of cnt along the root-to-leaf path of elementary interval `elem`
  /// (the stabbing count of any query point inside (x[elem], x[elem+1]]).
  std::int64_t stab_index(std::uint64_t elem) const;

 private:
  static std::unique_ptr<Node> build_numbered(std::uint64_t s, std::uint64_t t,
                                              std::uint64_t number);
  void apply(Node& v, std::uint64_t b, std::uint64_t e, int k);

  std::uint64_t n_;
  std::unique_ptr<Node> root_;
};

}  // namespace segtree
