#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "segtree/heap_tree.hpp"  // invariant_error
#include "segtree/reference_tree.hpp"

using namespace segtree;

namespace {

std::uint64_t count_nodes(const ReferenceTree::Node& v) {
  if (v.is_leaf()) return 1;
  return 1 + count_nodes(*v.left) + count_nodes(*v.right);
}

std::map<std::uint64_t, std::int64_t> nonzero_counts(
    const ReferenceTree::Node& v) {
  std::map<std::uint64_t, std::int64_t> out;
  std::function<void(const ReferenceTree::Node&)> walk =
      [&](const ReferenceTree::Node& node) {
        if (node.cnt != 0) out[node.number] = node.cnt;
        if (!node.is_leaf()) {
          walk(*node.left);
          walk(*node.right);
        }
      };
  walk(v);
  return out;
}

}  // namespace

TEST_CASE("build") {
  auto root = ReferenceTree::build(0, 13);
  CHECK(root->key == 6);
  CHECK(root->left->b == 0);
  CHECK(root->left->e == 6);
  CHECK(root->right->b == 6);
  CHECK(root->right->e == 13);
  CHECK(count_nodes(*root) == 2 * 13 - 1);

  auto leaf = ReferenceTree::build(0, 1);
  CHECK(leaf->is_leaf());

  auto small = ReferenceTree::build(0, 4);
  CHECK(count_nodes(*small) == 7);
  CHECK(small->left->left->b == 0);
  CHECK(small->left->left->e == 1);
  CHECK(small->right->right->b == 3);
  CHECK(small->right->right->e == 4);

  CHECK_THROWS_AS(ReferenceTree::build(3, 3), std::invalid_argument);
}

TEST_CASE("insert [2,5] into T(0,13) assigns {10,19,22}") {
  ReferenceTree tree(13);
  tree.insert(2, 5);
  const std::map<std::uint64_t, std::int64_t> expected = {
      {10, 1}, {19, 1}, {22, 1}};
  CHECK(nonzero_counts(tree.root()) == expected);
}

TEST_CASE("whole range and elementary inserts") {
  ReferenceTree tree(13);
  tree.insert(0, 13);
  CHECK(nonzero_counts(tree.root()) ==
        std::map<std::uint64_t, std::int64_t>{{1, 1}});
  CHECK(tree.canonical_covering(0, 1).size() == 1);
}

TEST_CASE("delete is the exact inverse of insert") {
  ReferenceTree tree(13);
  tree.insert(2, 5);
  tree.remove(2, 5);
  CHECK(nonzero_counts(tree.root()).empty());

  tree.insert(2, 5);
  tree.insert(2, 5);
  tree.remove(2, 5);
  CHECK(nonzero_counts(tree.root()) ==
        std::map<std::uint64_t, std::int64_t>{{10, 1}, {19, 1}, {22, 1}});
}

TEST_CASE("deleting a never-inserted interval is an invariant violation") {
  ReferenceTree tree(13);
  CHECK_THROWS_AS(tree.remove(2, 5), invariant_error);
}

TEST_CASE("canonical_covering fixtures") {
  ReferenceTree tree(13);
  CHECK(tree.canonical_covering(2, 5) ==
        std::vector<std::uint64_t>{10, 19, 22});
  CHECK(tree.canonical_covering(0, 13) == std::vector<std::uint64_t>{1});
  CHECK(tree.canonical_covering(0, 3) == std::vector<std::uint64_t>{4});
  CHECK_THROWS_AS(tree.canonical_covering(5, 5), std::invalid_argument);
}

TEST_CASE("covering tiles the interval, no siblings, <=2 per level") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng() % 64;
    ReferenceTree tree(n);
    const std::uint64_t b = rng() % n;
    const std::uint64_t e = b + 1 + rng() % (n - b);

    // Spans per covering node, found by number.
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> spans;
    std::function<void(const ReferenceTree::Node&)> walk =
        [&](const ReferenceTree::Node& node) {
          spans[node.number] = {node.b, node.e};
          if (!node.is_leaf()) {
            walk(*node.left);
            walk(*node.right);
          }
        };
    walk(tree.root());

    const std::vector<std::uint64_t> cov = tree.canonical_covering(b, e);
    std::vector<bool> tiled(n, false);
    std::map<int, int> per_level;
    for (std::uint64_t number : cov) {
      const auto [vb, ve] = spans.at(number);
      REQUIRE(b <= vb);
      REQUIRE(ve <= e);
      for (std::uint64_t j = vb; j < ve; ++j) {
        REQUIRE(!tiled[j]);  // interior-disjoint
        tiled[j] = true;
      }
      per_level[std::bit_width(number)] += 1;
      // Sibling exclusion.
      const std::uint64_t sibling = number ^ 1;
      if (number > 1)
        REQUIRE(std::find(cov.begin(), cov.end(), sibling) == cov.end());
    }
    for (std::uint64_t j = b; j < e; ++j) REQUIRE(tiled[j]);
    for (std::uint64_t j = 0; j < b; ++j) REQUIRE(!tiled[j]);
    for (std::uint64_t j = e; j < n; ++j) REQUIRE(!tiled[j]);
    for (const auto& [level, cnt] : per_level) REQUIRE(cnt <= 2);
  }
}

TEST_CASE("stabbing by path-sum matches brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 1 + rng() % 32;
    ReferenceTree tree(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> inserted;
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t b = rng() % n;
      const std::uint64_t e = b + 1 + rng() % (n - b);
      tree.insert(b, e);
      inserted.emplace_back(b, e);
    }
    for (std::uint64_t elem = 0; elem < n; ++elem) {
      std::int64_t expected = 0;
      for (const auto& [b, e] : inserted)
        if (b <= elem && elem < e) ++expected;
      REQUIRE(tree.stab_index(elem) == expected);
    }
  }
}
