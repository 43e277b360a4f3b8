#include "segtree/heap_tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace segtree {

namespace {

std::uint64_t live_key(std::uint64_t b, std::uint64_t e) {
  return (b << 32) | e;
}

}  // namespace

HeapSegmentTree::HeapSegmentTree(EndpointArray x) : x_(std::move(x)) {
  if (x_.size() < 2)
    throw std::invalid_argument("endpoint array needs at least 2 entries");
  if (!std::is_sorted(x_.begin(), x_.end()))
    throw std::invalid_argument("endpoint array must be non-decreasing");
  for (double c : x_)
    if (!std::isfinite(c))
      throw std::invalid_argument("endpoint array must be finite");
  n_ = x_.size() - 1;
  if (n_ >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("universe too large");
  tree_.assign(2 * n_, NodePayload{});
}

void HeapSegmentTree::change(std::uint64_t v, int k) {
  layout::check_node(v, n_);
  if (tree_[v].cnt + k < 0)
    throw invariant_error("count of node " + std::to_string(v) +
                          " would go negative");
  tree_[v].cnt += k;
}

void HeapSegmentTree::update(std::uint64_t v) {
  const layout::NodeKind kind = layout::node_kind(v, n_);
  NodePayload& p = tree_[v];
  if (kind == layout::NodeKind::Leaf) {
    const std::uint64_t le = layout::left_end(v, n_);
    p.clq = p.cnt;
    p.uni = p.cnt > 0 ? x_[le + 1] - x_[le] : 0.0;
    return;
  }
  const NodePayload& cl = tree_[2 * v];
  const NodePayload& cr = tree_[2 * v + 1];
  p.clq = p.cnt + std::max(cl.clq, cr.clq);
  if (kind == layout::NodeKind::C && p.cnt > 0) {
    p.uni = x_[layout::right_end(v, n_)] - x_[layout::left_end(v, n_)];
  } else {
    // A Y node is never assigned an interval, so its covered-length branch
    // is unreachable.
    assert(kind != layout::NodeKind::Y || p.cnt == 0);
    p.uni = cl.uni + cr.uni;
  }
}

void HeapSegmentTree::note_insert(std::uint64_t b, std::uint64_t e) {
  if (b >= e || e > n_)
    throw std::invalid_argument("interval (" + std::to_string(b) + ", " +
                                std::to_string(e) + ") not within 0 <= b < e <= " +
                                std::to_string(n_));
  ++live_[live_key(b, e)];
  ++live_total_;
}

void HeapSegmentTree::note_delete(std::uint64_t b, std::uint64_t e) {
  auto it = b < e && e <= n_ ? live_.find(live_key(b, e)) : live_.end();
  if (it == live_.end() || it->second == 0)
    throw std::invalid_argument("interval (" + std::to_string(b) + ", " +
                                std::to_string(e) + ") is not live");
  if (--it->second == 0) live_.erase(it);
  --live_total_;
}

// Recursive insert/delete. The disjointness test is b >= r || e <= l
// (half-open overlap); update runs on every node whose subtree changed.
void HeapSegmentTree::apply(std::uint64_t v, std::uint64_t b, std::uint64_t e,
                            int k) {
  count_visit();
  if (layout::node_kind(v, n_) == layout::NodeKind::Y) {
    apply(2 * v, b, e, k);
    apply(2 * v + 1, b, e, k);
    update(v);
    return;
  }
  const std::uint64_t l = layout::left_end(v, n_);
  const std::uint64_t r = layout::right_end(v, n_);
  if (b >= r || e <= l) return;
  if (b <= l && r <= e) {
    change(v, k);
  } else {
    const std::uint64_t m = (l + r) / 2;
    if (b < m) apply(2 * v, b, e, k);
    if (m < e) apply(2 * v + 1, b, e, k);
  }
  update(v);
}

void HeapSegmentTree::insert_recursive(std::uint64_t b, std::uint64_t e) {
  note_insert(b, e);
  apply(1, b, e, +1);
}

void HeapSegmentTree::delete_recursive(std::uint64_t b, std::uint64_t e) {
  note_delete(b, e);
  apply(1, b, e, -1);
}

std::int64_t HeapSegmentTree::stab_node(std::uint64_t v, double q) const {
  count_visit();
  if (layout::node_kind(v, n_) == layout::NodeKind::Y)
    return stab_node(2 * v, q) + stab_node(2 * v + 1, q);
  const std::uint64_t l = layout::left_end(v, n_);
  const std::uint64_t r = layout::right_end(v, n_);
  if (!(q > x_[l] && q <= x_[r])) return 0;
  std::int64_t c = tree_[v].cnt;
  if (r - l > 1) {
    const std::uint64_t m = (l + r) / 2;
    c += q <= x_[m] ? stab_node(2 * v, q) : stab_node(2 * v + 1, q);
  }
  return c;
}

std::int64_t HeapSegmentTree::stab_recursive(double q) const {
  if (!(q > x_[0] && q <= x_[n_])) return 0;
  return stab_node(1, q);
}

namespace {

void cover(std::uint64_t v, std::uint64_t n, std::uint64_t b, std::uint64_t e,
           std::vector<std::uint64_t>& out) {
  if (layout::node_kind(v, n) == layout::NodeKind::Y) {
    cover(2 * v, n, b, e, out);
    cover(2 * v + 1, n, b, e, out);
    return;
  }
  const std::uint64_t l = layout::left_end(v, n);
  const std::uint64_t r = layout::right_end(v, n);
  if (b >= r || e <= l) return;
  if (b <= l && r <= e) {
    out.push_back(v);
    return;
  }
  const std::uint64_t m = (l + r) / 2;
  if (b < m) cover(2 * v, n, b, e, out);
  if (m < e) cover(2 * v + 1, n, b, e, out);
}

}  // namespace

std::vector<std::uint64_t> covering_recursive(std::uint64_t n, std::uint64_t b,
                                              std::uint64_t e) {
  if (b >= e || e > n) throw std::invalid_argument("need 0 <= b < e <= N");
  std::vector<std::uint64_t> out;
  cover(1, n, b, e, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace segtree
