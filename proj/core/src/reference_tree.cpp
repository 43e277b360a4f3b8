#include "segtree/reference_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "segtree/heap_tree.hpp"  // invariant_error

namespace segtree {

std::unique_ptr<ReferenceTree::Node> ReferenceTree::build_numbered(
    std::uint64_t s, std::uint64_t t, std::uint64_t number) {
  auto v = std::make_unique<Node>();
  v->b = s;
  v->e = t;
  v->number = number;
  if (s + 1 < t) {
    const std::uint64_t m = (s + t) / 2;
    v->key = m;
    v->left = build_numbered(s, m, 2 * number);
    v->right = build_numbered(m, t, 2 * number + 1);
  }
  return v;
}

std::unique_ptr<ReferenceTree::Node> ReferenceTree::build(std::uint64_t s,
                                                          std::uint64_t t) {
  if (s >= t) throw std::invalid_argument("build requires s < t");
  return build_numbered(s, t, 1);
}

ReferenceTree::ReferenceTree(std::uint64_t n) : n_(n), root_(build(0, n)) {}

void ReferenceTree::apply(Node& v, std::uint64_t b, std::uint64_t e, int k) {
  if (b <= v.b && e >= v.e) {
    if (v.cnt + k < 0)
      throw invariant_error("count of node " + std::to_string(v.number) +
                            " would go negative");
    v.cnt += k;
    return;
  }
  if (b < v.key) apply(*v.left, b, e, k);
  if (v.key < e) apply(*v.right, b, e, k);
}

void ReferenceTree::insert(std::uint64_t b, std::uint64_t e) {
  if (b >= e || e > n_) throw std::invalid_argument("need 0 <= b < e <= N");
  apply(*root_, b, e, +1);
}

void ReferenceTree::remove(std::uint64_t b, std::uint64_t e) {
  if (b >= e || e > n_) throw std::invalid_argument("need 0 <= b < e <= N");
  apply(*root_, b, e, -1);
}

namespace {

void collect(const ReferenceTree::Node& v, std::uint64_t b, std::uint64_t e,
             std::vector<std::uint64_t>& out) {
  if (b <= v.b && e >= v.e) {
    out.push_back(v.number);
    return;
  }
  if (b < v.key) collect(*v.left, b, e, out);
  if (v.key < e) collect(*v.right, b, e, out);
}

}  // namespace

std::vector<std::uint64_t> ReferenceTree::canonical_covering(
    std::uint64_t b, std::uint64_t e) const {
  if (b >= e || e > n_) throw std::invalid_argument("need 0 <= b < e <= N");
  std::vector<std::uint64_t> out;
  collect(*root_, b, e, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ReferenceTree::stab_index(std::uint64_t elem) const {
  if (elem >= n_) throw std::out_of_range("elementary index out of range");
  std::int64_t count = 0;
  const Node* v = root_.get();
  for (;;) {
    count += v->cnt;
    if (v->is_leaf()) return count;
    v = elem < v->key ? v->left.get() : v->right.get();
  }
}

}  // namespace segtree
