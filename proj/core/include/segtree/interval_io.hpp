#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segtree/interval.hpp"

// Ingestion and normalization: parse interval files, build the endpoint
// universe, map coordinate intervals to index intervals deterministically,
// and generate seeded synthetic workloads.

namespace segtree::io {

enum class Format { Csv, Jsonl };

/// Malformed input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// CSV rows "l,r" (decimal, '#' comments and blank lines skipped) or
/// JSON-lines objects with fields l, r. Throws ParseError on malformed
/// rows, std::invalid_argument on l > r or non-finite coordinates.
IntervalSet parse(std::istream& in, Format format);

/// Format inferred from the extension (.jsonl/.json -> Jsonl, else Csv)
/// unless given explicitly.
IntervalSet parse_file(const std::string& path,
                       std::optional<Format> format = std::nullopt);

std::string serialize(const IntervalSet& s, Format format);

/// Shortest decimal representation that round-trips the double.
std::string format_number(double value);

struct Normalized {
  EndpointArray x;                        // 2n endpoints, sorted, dups kept
  std::vector<IndexInterval> intervals;   // one per input, same order
  std::size_t degenerate_count = 0;       // entries with b == e
};

/// x = all 2n endpoints sorted (N = 2n-1); each interval maps to (b, e)
/// where b and e are the first indices with x[b] = l and x[e] = r.
Normalized normalize(const IntervalSet& s);

/// Seeded synthetic workload descriptor. Identical seed and parameters
/// produce an identical interval set and trace.
struct Workload {
  std::uint64_t seed = 1;
  std::size_t n = 0;        // intervals in the universe
  std::size_t ops = 0;      // trace length
  double insert_weight = 0.45;
  double delete_weight = 0.25;
  double stab_weight = 0.30;
  double coord_lo = 0.0;    // uniform coordinate distribution
  double coord_hi = 1e6;
};

struct TraceOp {
  enum class Kind { Insert, Delete, Stab };
  Kind kind = Kind::Insert;
  std::size_t index = 0;  // into the generated interval set (insert/delete)
  double query = 0.0;     // stab only
};

struct Generated {
  IntervalSet set;
  std::vector<TraceOp> trace;
};

/// Deterministic for a fixed workload; deletes are only ever emitted for
/// currently-live intervals (an insert is substituted when none are live).
Generated generate(const Workload& w);

}  // namespace segtree::io
