#include "segtree/interval_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace segtree::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_coordinate(const std::string& text, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, "bad coordinate '" + text + "'");
  return value;
}

void check_interval(double l, double r, std::size_t line) {
  if (!std::isfinite(l) || !std::isfinite(r))
    throw std::invalid_argument("line " + std::to_string(line) +
                                ": non-finite coordinate");
  if (l > r)
    throw std::invalid_argument("line " + std::to_string(line) +
                                ": l > r");
}

}  // namespace

IntervalSet parse(std::istream& in, Format format) {
  IntervalSet out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    double l = 0.0, r = 0.0;
    if (format == Format::Csv) {
      const auto comma = line.find(',');
      if (comma == std::string::npos)
        throw ParseError(line_no, "expected 'l,r'");
      l = parse_coordinate(trim(line.substr(0, comma)), line_no);
      r = parse_coordinate(trim(line.substr(comma + 1)), line_no);
    } else {
      nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
      if (obj.is_discarded() || !obj.is_object() || !obj.contains("l") ||
          !obj.contains("r") || !obj["l"].is_number() || !obj["r"].is_number())
        throw ParseError(line_no, "expected {\"l\": ..., \"r\": ...}");
      l = obj["l"].get<double>();
      r = obj["r"].get<double>();
    }
    check_interval(l, r, line_no);
    out.push_back(Interval{l, r});
  }
  return out;
}

IntervalSet parse_file(const std::string& path, std::optional<Format> format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Format f = format.value_or(
      path.ends_with(".jsonl") || path.ends_with(".json") ? Format::Jsonl
                                                          : Format::Csv);
  return parse(in, f);
}

std::string format_number(double value) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    double parsed = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), parsed);
    if (parsed == value) break;
  }
  return buf;
}

std::string serialize(const IntervalSet& s, Format format) {
  std::string out;
  for (const Interval& iv : s) {
    if (format == Format::Csv) {
      out += format_number(iv.l);
      out += ',';
      out += format_number(iv.r);
    } else {
      nlohmann::json obj{{"l", iv.l}, {"r", iv.r}};
      out += obj.dump();
    }
    out += '\n';
  }
  return out;
}

Normalized normalize(const IntervalSet& s) {
  Normalized result;
  result.x.reserve(2 * s.size());
  for (const Interval& iv : s) {
    if (!std::isfinite(iv.l) || !std::isfinite(iv.r))
      throw std::invalid_argument("non-finite coordinate");
    if (iv.l > iv.r) throw std::invalid_argument("l > r");
    result.x.push_back(iv.l);
    result.x.push_back(iv.r);
  }
  std::sort(result.x.begin(), result.x.end());
  result.intervals.reserve(s.size());
  for (const Interval& iv : s) {
    // First occurrence of each coordinate, so duplicate endpoints map
    // deterministically.
    const std::uint64_t b =
        std::lower_bound(result.x.begin(), result.x.end(), iv.l) -
        result.x.begin();
    const std::uint64_t e =
        std::lower_bound(result.x.begin(), result.x.end(), iv.r) -
        result.x.begin();
    result.intervals.push_back(IndexInterval{b, e});
    if (b == e) ++result.degenerate_count;
  }
  return result;
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  double uniform(double lo, double hi) {
    // 53 random bits -> [0, 1); avoids std distributions so the output is
    // identical across standard library implementations.
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Generated generate(const Workload& w) {
  if (w.coord_lo >= w.coord_hi)
    throw std::invalid_argument("coordinate range is empty");
  if (w.insert_weight < 0 || w.delete_weight < 0 || w.stab_weight < 0 ||
      w.insert_weight + w.delete_weight + w.stab_weight <= 0)
    throw std::invalid_argument("bad operation mix");
  Generated out;
  if (w.n == 0) return out;
  Rng rng(w.seed);
  out.set.reserve(w.n);
  for (std::size_t i = 0; i < w.n; ++i) {
    double a = rng.uniform(w.coord_lo, w.coord_hi);
    double b = rng.uniform(w.coord_lo, w.coord_hi);
    while (b == a) b = rng.uniform(w.coord_lo, w.coord_hi);
    out.set.push_back(Interval{std::min(a, b), std::max(a, b)});
  }
  const double total = w.insert_weight + w.delete_weight + w.stab_weight;
  std::vector<std::size_t> live;  // indices with multiplicity
  out.trace.reserve(w.ops);
  for (std::size_t i = 0; i < w.ops; ++i) {
    const double pick = rng.uniform(0.0, total);
    TraceOp op;
    if (pick < w.insert_weight + w.delete_weight &&
        pick >= w.insert_weight && !live.empty()) {
      op.kind = TraceOp::Kind::Delete;
      const std::size_t pos = rng.below(live.size());
      op.index = live[pos];
      live[pos] = live.back();
      live.pop_back();
    } else if (pick >= w.insert_weight + w.delete_weight) {
      op.kind = TraceOp::Kind::Stab;
      op.query = rng.uniform(w.coord_lo, w.coord_hi);
    } else {
      op.kind = TraceOp::Kind::Insert;
      op.index = rng.below(w.n);
      live.push_back(op.index);
    }
    out.trace.push_back(op);
  }
  return out;
}

}  // namespace segtree::io
