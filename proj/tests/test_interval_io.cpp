#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "segtree/interval_io.hpp"

using namespace segtree;
using namespace segtree::io;

TEST_CASE("normalize") {
  const Normalized a = normalize({{1, 4}, {2, 6}, {3, 5}});
  CHECK(a.x == EndpointArray{1, 2, 3, 4, 5, 6});
  CHECK(a.intervals == std::vector<IndexInterval>{{0, 3}, {1, 5}, {2, 4}});
  CHECK(a.degenerate_count == 0);

  const Normalized b = normalize({{1, 2}, {2, 3}});
  CHECK(b.x == EndpointArray{1, 2, 2, 3});
  CHECK(b.intervals == std::vector<IndexInterval>{{0, 1}, {1, 3}});

  const Normalized c = normalize({{5, 5}});
  CHECK(c.x == EndpointArray{5, 5});
  CHECK(c.intervals == std::vector<IndexInterval>{{0, 0}});
  CHECK(c.intervals[0].degenerate());
  CHECK(c.degenerate_count == 1);

  CHECK_THROWS_AS(normalize({{4, 1}}), std::invalid_argument);
}

TEST_CASE("normalize always yields N = 2n-1 with exact endpoint mapping") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntervalSet s;
    const std::size_t count = 1 + rng() % 30;
    for (std::size_t i = 0; i < count; ++i) {
      double a = static_cast<double>(rng() % 50);
      double b = static_cast<double>(rng() % 50);
      s.push_back(Interval{std::min(a, b), std::max(a, b)});
    }
    const Normalized norm = normalize(s);
    REQUIRE(norm.x.size() == 2 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      REQUIRE(norm.x[norm.intervals[i].b] == s[i].l);
      REQUIRE(norm.x[norm.intervals[i].e] == s[i].r);
      // First occurrence: nothing before b/e equals the coordinate.
      REQUIRE((norm.intervals[i].b == 0 ||
               norm.x[norm.intervals[i].b - 1] < s[i].l));
      REQUIRE((norm.intervals[i].e == 0 ||
               norm.x[norm.intervals[i].e - 1] < s[i].r));
    }
  }
}

TEST_CASE("parse csv") {
  std::istringstream ok("1,4\n2,6\n");
  CHECK(parse(ok, Format::Csv) == IntervalSet{{1, 4}, {2, 6}});

  std::istringstream commented("# c\n\n3,5\n");
  CHECK(parse(commented, Format::Csv) == IntervalSet{{3, 5}});

  std::istringstream reversed("4,1\n");
  try {
    parse(reversed, Format::Csv);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  std::istringstream malformed("1,2\nbogus\n");
  try {
    parse(malformed, Format::Csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parse jsonl") {
  std::istringstream ok(R"({"l": 1, "r": 4}
{"l": 2.5, "r": 6})");
  CHECK(parse(ok, Format::Jsonl) == IntervalSet{{1, 4}, {2.5, 6}});

  std::istringstream bad(R"({"l": 1})");
  CHECK_THROWS_AS(parse(bad, Format::Jsonl), ParseError);
}

TEST_CASE("serialize/parse round-trip") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    IntervalSet s;
    const std::size_t count = rng() % 20;
    for (std::size_t i = 0; i < count; ++i) {
      // Awkward decimals on purpose.
      double a = static_cast<double>(rng()) / 7.0e14;
      double b = a + static_cast<double>(rng() % 1000) / 3.0;
      s.push_back(Interval{a, b});
    }
    for (Format f : {Format::Csv, Format::Jsonl}) {
      std::istringstream in(serialize(s, f));
      REQUIRE(parse(in, f) == s);
    }
  }
}

TEST_CASE("generate is deterministic") {
  Workload w;
  w.seed = 77;
  w.n = 40;
  w.ops = 500;
  const Generated a = generate(w);
  const Generated b = generate(w);
  CHECK(a.set == b.set);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].kind == b.trace[i].kind);
    CHECK(a.trace[i].index == b.trace[i].index);
    CHECK(a.trace[i].query == b.trace[i].query);
  }
}

TEST_CASE("generate: empty workload and live-delete discipline") {
  Workload empty;
  empty.n = 0;
  empty.ops = 100;
  const Generated none = generate(empty);
  CHECK(none.set.empty());
  CHECK(none.trace.empty());

  Workload w;
  w.seed = 3;
  w.n = 10;
  w.ops = 2000;
  w.delete_weight = 0.5;
  const Generated gen = generate(w);
  std::vector<int> live(w.n, 0);
  for (const TraceOp& op : gen.trace) {
    if (op.kind == TraceOp::Kind::Insert) {
      ++live[op.index];
    } else if (op.kind == TraceOp::Kind::Delete) {
      REQUIRE(live[op.index] > 0);
      --live[op.index];
    }
  }
}
