#include "segtree/bottom_up.hpp"

#include <algorithm>
#include <stdexcept>

namespace segtree::bottom_up {

void modify(HeapSegmentTree& tree, std::uint64_t v, int k) {
  tree.count_visit();
  tree.change(v, k);
  tree.update(v);
}

void pushup(HeapSegmentTree& tree, std::uint64_t v) {
  while (v > 0) {
    tree.count_visit();
    tree.update(v);
    v /= 2;
  }
}

namespace {

// Leaf-anchored climb. Starting from the leaves of the two boundary
// elementary intervals, a node is a canonical covering node exactly when
// it is a right child left of the climb (odd l) or a left child right of
// it (even r); cursors are halved unconditionally so the loop terminates
// for every input, including b+1 == e and N == 1.
template <typename Touch>
void climb(std::uint64_t n, std::uint64_t b, std::uint64_t e, Touch touch) {
  std::uint64_t l = b + n;
  std::uint64_t r = e - 1 + n;
  while (l <= r) {
    if (l % 2 == 1) touch(l++);
    if (r % 2 == 0) touch(r--);
    l /= 2;
    r /= 2;
  }
}

}  // namespace

void insert_iterative(HeapSegmentTree& tree, std::uint64_t b, std::uint64_t e) {
  tree.note_insert(b, e);
  const std::uint64_t n = tree.universe_size();
  const std::uint64_t s = (b + n) / 2;
  const std::uint64_t t = (e - 1 + n) / 2;
  climb(n, b, e, [&](std::uint64_t v) { modify(tree, v, +1); });
  pushup(tree, s);
  pushup(tree, t);
}

void delete_iterative(HeapSegmentTree& tree, std::uint64_t b, std::uint64_t e) {
  tree.note_delete(b, e);
  const std::uint64_t n = tree.universe_size();
  const std::uint64_t s = (b + n) / 2;
  const std::uint64_t t = (e - 1 + n) / 2;
  climb(n, b, e, [&](std::uint64_t v) { modify(tree, v, -1); });
  pushup(tree, s);
  pushup(tree, t);
}

std::int64_t stab_iterative(const HeapSegmentTree& tree, double q) {
  const EndpointArray& x = tree.endpoints();
  const std::uint64_t n = tree.universe_size();
  if (!(q > x[0] && q <= x[n])) return 0;
  // First j with x[j] >= q; q lands in elementary interval (x[j-1], x[j]].
  const std::uint64_t j = std::lower_bound(x.begin(), x.end(), q) - x.begin();
  std::uint64_t v = (j - 1) + n;
  std::int64_t count = 0;
  while (v >= 1 && layout::node_kind(v, n) != layout::NodeKind::Y) {
    tree.count_visit();
    count += tree.payload(v).cnt;
    v /= 2;
  }
  return count;
}

std::vector<std::uint64_t> covering_iterative(std::uint64_t n, std::uint64_t b,
                                              std::uint64_t e) {
  if (b >= e || e > n) throw std::invalid_argument("need 0 <= b < e <= N");
  std::vector<std::uint64_t> out;
  climb(n, b, e, [&](std::uint64_t v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace segtree::bottom_up
