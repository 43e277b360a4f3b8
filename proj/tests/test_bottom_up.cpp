#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "segtree/bottom_up.hpp"
#include "segtree/heap_tree.hpp"

using namespace segtree;
using namespace segtree::bottom_up;

namespace {

EndpointArray unit_grid(std::uint64_t n) {
  EndpointArray x(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) x[i] = static_cast<double>(i);
  return x;
}

HeapSegmentTree fixture_tree() {
  HeapSegmentTree tree(EndpointArray{1, 2, 3, 4, 5, 6});
  insert_iterative(tree, 0, 3);
  insert_iterative(tree, 1, 5);
  insert_iterative(tree, 2, 4);
  return tree;
}

bool all_zero(const HeapSegmentTree& tree) {
  for (const NodePayload& p : tree.payloads())
    if (p.cnt != 0 || p.clq != 0 || p.uni != 0.0) return false;
  return true;
}

}  // namespace

TEST_CASE("covering_iterative fixtures") {
  CHECK(covering_iterative(13, 2, 5) == std::vector<std::uint64_t>{8, 15});
  CHECK(covering_iterative(5, 0, 3) == std::vector<std::uint64_t>{3, 5});
  CHECK(covering_iterative(1, 0, 1) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(covering_iterative(13, 5, 5), std::invalid_argument);
}

TEST_CASE("insert_iterative on the smallest universe terminates") {
  HeapSegmentTree tree(EndpointArray{0, 7});
  insert_iterative(tree, 0, 1);
  CHECK(tree.payload(1).cnt == 1);
  CHECK(tree.union_measure() == doctest::Approx(7.0));
}

TEST_CASE("modify") {
  HeapSegmentTree tree(EndpointArray{1, 2, 3, 4, 5, 6});
  modify(tree, 9, +1);  // leaf (5, 6]
  CHECK(tree.payload(9).cnt == 1);
  CHECK(tree.payload(9).clq == 1);
  CHECK(tree.payload(9).uni == doctest::Approx(1.0));
  modify(tree, 8, +1);  // leaf (4, 5]
  CHECK(tree.payload(8).uni == doctest::Approx(1.0));
  modify(tree, 8, -1);
  modify(tree, 9, -1);
  CHECK(all_zero(tree));
  CHECK_THROWS_AS(modify(tree, 9, -1), invariant_error);
}

TEST_CASE("pushup") {
  HeapSegmentTree tree(unit_grid(13));
  pushup(tree, 0);  // no-op
  CHECK(all_zero(tree));
  // pushup(12) refreshes 12, 6, 3, 1 in that order, so clq propagates
  // up the halving chain and nowhere else.
  tree.change(12, +1);
  pushup(tree, 12);
  CHECK(tree.payload(12).clq == 1);
  CHECK(tree.payload(6).clq == 1);
  CHECK(tree.payload(3).clq == 1);
  CHECK(tree.payload(1).clq == 1);
  CHECK(tree.payload(2).clq == 0);
}

TEST_CASE("delete_iterative") {
  HeapSegmentTree tree(unit_grid(13));
  insert_iterative(tree, 2, 5);
  delete_iterative(tree, 2, 5);
  CHECK(all_zero(tree));

  // Mixed strategies share covering sets.
  tree.insert_recursive(2, 5);
  delete_iterative(tree, 2, 5);
  CHECK(all_zero(tree));

  CHECK_THROWS_AS(delete_iterative(tree, 2, 5), std::invalid_argument);
}

TEST_CASE("stab_iterative on the fixture") {
  const HeapSegmentTree tree = fixture_tree();
  CHECK(stab_iterative(tree, 3.5) == 3);
  CHECK(stab_iterative(tree, 1.0) == 0);  // q <= x[0], half-open
  CHECK(stab_iterative(tree, 6.0) == 1);
  CHECK(stab_iterative(tree, 0.5) == 0);
  CHECK(stab_iterative(tree, 6.5) == 0);
}

TEST_CASE("strategy equivalence, exhaustive small universes") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    HeapSegmentTree rec(unit_grid(n));
    HeapSegmentTree iter(unit_grid(n));
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::uint64_t e = b + 1; e <= n; ++e) {
        CAPTURE(n); CAPTURE(b); CAPTURE(e);
        REQUIRE(covering_recursive(n, b, e) == covering_iterative(n, b, e));
        rec.insert_recursive(b, e);
        insert_iterative(iter, b, e);
        const auto pr = rec.payloads();
        const auto pi = iter.payloads();
        for (std::size_t i = 0; i < pr.size(); ++i) {
          REQUIRE(pr[i].cnt == pi[i].cnt);
          REQUIRE(pr[i].clq == pi[i].clq);
          REQUIRE(pr[i].uni == doctest::Approx(pi[i].uni).epsilon(1e-12));
        }
        rec.delete_recursive(b, e);
        delete_iterative(iter, b, e);
      }
    }
    REQUIRE(all_zero(rec));
    REQUIRE(all_zero(iter));
  }
}

TEST_CASE("stab agreement between strategies on random states") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng() % 48;
    HeapSegmentTree tree(unit_grid(n));
    for (int i = 0; i < 30; ++i) {
      const std::uint64_t b = rng() % n;
      const std::uint64_t e = b + 1 + rng() % (n - b);
      insert_iterative(tree, b, e);
    }
    for (int k = 0; k < 100; ++k) {
      const double q =
          static_cast<double>(rng() % (10 * (n + 2))) / 10.0 - 1.0;
      REQUIRE(stab_iterative(tree, q) == tree.stab_recursive(q));
    }
  }
}

TEST_CASE("pushup repairs every stale ancestor") {
  // Insert with updates, then recompute every payload from scratch and
  // compare: no node may be stale.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng() % 40;
    HeapSegmentTree tree(unit_grid(n));
    for (int i = 0; i < 15; ++i) {
      const std::uint64_t b = rng() % n;
      const std::uint64_t e = b + 1 + rng() % (n - b);
      insert_iterative(tree, b, e);
    }
    HeapSegmentTree rebuilt(unit_grid(n));
    for (std::uint64_t v = 1; v <= 2 * n - 1; ++v) {
      const std::int64_t cnt = tree.payload(v).cnt;
      for (std::int64_t i = 0; i < cnt; ++i) rebuilt.change(v, +1);
    }
    for (std::uint64_t v = 2 * n - 1; v >= 1; --v) rebuilt.update(v);
    const auto a = tree.payloads();
    const auto b = rebuilt.payloads();
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].cnt == b[i].cnt);
      REQUIRE(a[i].clq == b[i].clq);
      REQUIRE(a[i].uni == doctest::Approx(b[i].uni));
    }
  }
}
