// Microbenchmarks for insert/delete/stab across the three
// implementations, over a range of universe sizes.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "segtree/bottom_up.hpp"
#include "segtree/heap_tree.hpp"
#include "segtree/reference_tree.hpp"

using namespace segtree;

namespace {

EndpointArray unit_grid(std::uint64_t n) {
  EndpointArray x(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) x[i] = static_cast<double>(i);
  return x;
}

struct Script {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;
  std::vector<double> queries;
};

Script make_script(std::uint64_t n, std::size_t count) {
  std::mt19937_64 rng(n * 1000003 + count);
  Script s;
  s.intervals.reserve(count);
  s.queries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t b = rng() % n;
    const std::uint64_t e = b + 1 + rng() % (n - b);
    s.intervals.emplace_back(b, e);
    s.queries.push_back(static_cast<double>(rng() % n) + 0.5);
  }
  return s;
}

constexpr std::size_t kOps = 1024;

void BM_insert_heap_rec(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  HeapSegmentTree tree(unit_grid(n));
  for (auto _ : state) {
    for (const auto& [b, e] : s.intervals) tree.insert_recursive(b, e);
    for (const auto& [b, e] : s.intervals) tree.delete_recursive(b, e);
  }
  state.SetItemsProcessed(state.iterations() * kOps * 2);
}

void BM_insert_heap_iter(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  HeapSegmentTree tree(unit_grid(n));
  for (auto _ : state) {
    for (const auto& [b, e] : s.intervals)
      bottom_up::insert_iterative(tree, b, e);
    for (const auto& [b, e] : s.intervals)
      bottom_up::delete_iterative(tree, b, e);
  }
  state.SetItemsProcessed(state.iterations() * kOps * 2);
}

void BM_insert_linked(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  ReferenceTree tree(n);
  for (auto _ : state) {
    for (const auto& [b, e] : s.intervals) tree.insert(b, e);
    for (const auto& [b, e] : s.intervals) tree.remove(b, e);
  }
  state.SetItemsProcessed(state.iterations() * kOps * 2);
}

void BM_stab_heap_rec(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  HeapSegmentTree tree(unit_grid(n));
  for (const auto& [b, e] : s.intervals) tree.insert_recursive(b, e);
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const double q : s.queries) sum += tree.stab_recursive(q);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * kOps);
}

void BM_stab_heap_iter(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  HeapSegmentTree tree(unit_grid(n));
  for (const auto& [b, e] : s.intervals)
    bottom_up::insert_iterative(tree, b, e);
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const double q : s.queries)
      sum += bottom_up::stab_iterative(tree, q);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * kOps);
}

void BM_stab_linked(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const Script s = make_script(n, kOps);
  ReferenceTree tree(n);
  for (const auto& [b, e] : s.intervals) tree.insert(b, e);
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const double q : s.queries)
      sum += tree.stab_index(static_cast<std::uint64_t>(q));
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * kOps);
}

}  // namespace

BENCHMARK(BM_insert_heap_rec)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_insert_heap_iter)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_insert_linked)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_stab_heap_rec)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_stab_heap_iter)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_stab_linked)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
