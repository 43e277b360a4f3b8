#include "segtree/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace segtree::oracle {

std::int64_t oracle_stab(const IntervalSet& s, double q) {
  std::int64_t count = 0;
  for (const Interval& iv : s)
    if (iv.l < q && q <= iv.r) ++count;
  return count;
}

namespace {

std::vector<double> sorted_endpoints(const IntervalSet& s) {
  std::vector<double> pts;
  pts.reserve(2 * s.size());
  for (const Interval& iv : s) {
    pts.push_back(iv.l);
    pts.push_back(iv.r);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::int64_t cover_count(const IntervalSet& s, double a, double b) {
  std::int64_t count = 0;
  for (const Interval& iv : s)
    if (iv.l <= a && b <= iv.r) ++count;
  return count;
}

}  // namespace

double oracle_union(const IntervalSet& s) {
  const std::vector<double> pts = sorted_endpoints(s);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] < pts[i + 1] && cover_count(s, pts[i], pts[i + 1]) > 0)
      total += pts[i + 1] - pts[i];
  return total;
}

std::int64_t oracle_clique(const IntervalSet& s) {
  const std::vector<double> pts = sorted_endpoints(s);
  std::int64_t best = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] < pts[i + 1])
      best = std::max(best, cover_count(s, pts[i], pts[i + 1]));
  return best;
}

ExplicitTree explicit_tree(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("universe size must be positive");
  ExplicitTree tree;
  tree.n = n;
  tree.nodes.resize(2 * n);
  for (std::uint64_t v = 1; v <= 2 * n - 1; ++v)
    tree.nodes[v].depth = v == 1 ? 0 : tree.nodes[v / 2].depth + 1;
  for (std::uint64_t v = 2 * n - 1; v >= 1; --v) {
    ExplicitNode& node = tree.nodes[v];
    if (v >= n) {
      node.height = 0;
      node.complete = true;
      node.elems = {v - n};
    } else {
      const ExplicitNode& left = tree.nodes[2 * v];
      const ExplicitNode& right = tree.nodes[2 * v + 1];
      node.height = 1 + std::max(left.height, right.height);
      node.complete =
          left.complete && right.complete && left.height == right.height;
      node.elems = left.elems;
      node.elems.insert(node.elems.end(), right.elems.begin(),
                        right.elems.end());
      std::sort(node.elems.begin(), node.elems.end());
    }
    // Merge elementary indices into maximal runs; elementary i is the
    // index interval [i, i+1].
    for (std::size_t i = 0; i < node.elems.size();) {
      std::size_t j = i;
      while (j + 1 < node.elems.size() &&
             node.elems[j + 1] == node.elems[j] + 1)
        ++j;
      node.region.push_back(IndexInterval{node.elems[i], node.elems[j] + 1});
      i = j + 1;
    }
  }
  return tree;
}

std::vector<std::uint64_t> oracle_covering(std::uint64_t n, std::uint64_t b,
                                           std::uint64_t e) {
  if (b >= e || e > n) throw std::invalid_argument("need 0 <= b < e <= N");
  const ExplicitTree tree = explicit_tree(n);
  auto inside = [&](std::uint64_t v) {
    for (std::uint64_t elem : tree.at(v).elems)
      if (elem < b || elem + 1 > e) return false;
    return true;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 1; v <= 2 * n - 1; ++v)
    if (inside(v) && (v == 1 || !inside(v / 2))) out.push_back(v);
  return out;
}

}  // namespace segtree::oracle
