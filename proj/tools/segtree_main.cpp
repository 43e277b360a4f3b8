// Command-line front end: stats, stab, cover, layout and bench subcommands
// over the heap segment tree, the bottom-up strategy and the linked-node
// baseline.
//
// Exit codes: 0 ok, 1 input/usage error, 2 internal invariant or
// cross-implementation mismatch.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "segtree/bottom_up.hpp"
#include "segtree/heap_tree.hpp"
#include "segtree/interval_io.hpp"
#include "segtree/oracle.hpp"
#include "segtree/reference_tree.hpp"

namespace {

using namespace segtree;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

bool log_enabled() {
  const char* v = std::getenv("SEGTREE_LOG");
  return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[segtree] " << msg << "\n";
}

struct LoadedSet {
  IntervalSet set;
  io::Normalized norm;
  std::optional<HeapSegmentTree> tree;  // absent when the set is empty
};

enum class Impl { HeapRec, HeapIter, Linked };

Impl parse_impl(const std::string& name) {
  if (name == "heap-rec") return Impl::HeapRec;
  if (name == "heap-iter") return Impl::HeapIter;
  if (name == "linked") return Impl::Linked;
  throw std::invalid_argument("unknown implementation '" + name + "'");
}

// Builds the heap tree via the iterative strategy (the two strategies are
// payload-equivalent; queries pick their own path).
LoadedSet load(const std::string& path, std::optional<io::Format> format) {
  LoadedSet out;
  out.set = io::parse_file(path, format);
  out.norm = io::normalize(out.set);
  if (!out.norm.x.empty()) {
    out.tree.emplace(out.norm.x);
    for (const IndexInterval& iv : out.norm.intervals)
      if (!iv.degenerate())
        bottom_up::insert_iterative(*out.tree, iv.b, iv.e);
  }
  return out;
}

std::int64_t linked_stab(const ReferenceTree& tree, const EndpointArray& x,
                         double q) {
  const std::uint64_t n = tree.universe_size();
  if (!(q > x[0] && q <= x[n])) return 0;
  const std::uint64_t j = std::lower_bound(x.begin(), x.end(), q) - x.begin();
  return tree.stab_index(j - 1);
}

int cmd_stats(const std::string& input, std::optional<io::Format> format,
              bool check) {
  const LoadedSet data = load(input, format);
  const std::size_t n = data.set.size();
  const std::uint64_t universe = data.tree ? data.tree->universe_size() : 0;
  const double uni = data.tree ? data.tree->union_measure() : 0.0;
  const std::int64_t clq = data.tree ? data.tree->max_clique() : 0;
  std::cout << "n=" << n << " N=" << universe << " union="
            << io::format_number(uni) << " clique=" << clq;
  if (data.norm.degenerate_count > 0)
    std::cout << " degenerate=" << data.norm.degenerate_count;
  std::cout << "\n";
  if (check) {
    const double expected_uni = oracle::oracle_union(data.set);
    const std::int64_t expected_clq = oracle::oracle_clique(data.set);
    const double scale = std::max(1.0, std::abs(expected_uni));
    if (std::abs(uni - expected_uni) > 1e-9 * scale || clq != expected_clq) {
      std::cerr << "check failed: oracle union=" << expected_uni
                << " clique=" << expected_clq << "\n";
      return kExitMismatch;
    }
    log_line("oracle check passed");
  }
  return kExitOk;
}

int cmd_stab(const std::string& input, std::optional<io::Format> format,
             const std::vector<double>& queries, Impl impl, bool check) {
  const LoadedSet data = load(input, format);
  std::optional<ReferenceTree> linked;
  if (impl == Impl::Linked && data.tree) {
    linked.emplace(data.tree->universe_size());
    for (const IndexInterval& iv : data.norm.intervals)
      if (!iv.degenerate()) linked->insert(iv.b, iv.e);
  }
  std::ostringstream row;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const double q = queries[i];
    std::int64_t count = 0;
    if (data.tree) {
      switch (impl) {
        case Impl::HeapRec: count = data.tree->stab_recursive(q); break;
        case Impl::HeapIter: count = bottom_up::stab_iterative(*data.tree, q); break;
        case Impl::Linked: count = linked_stab(*linked, data.norm.x, q); break;
      }
    }
    if (check && count != oracle::oracle_stab(data.set, q)) {
      std::cerr << "check failed: stab(" << q << ") oracle="
                << oracle::oracle_stab(data.set, q) << " got=" << count << "\n";
      return kExitMismatch;
    }
    row << (i ? " " : "") << count;
  }
  std::cout << row.str() << "\n";
  return kExitOk;
}

int cmd_cover(std::uint64_t n, std::uint64_t b, std::uint64_t e, Impl impl) {
  std::vector<std::uint64_t> nodes;
  if (impl == Impl::Linked) {
    ReferenceTree tree(n);
    nodes = tree.canonical_covering(b, e);
  } else {
    nodes = covering_recursive(n, b, e);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    std::cout << (i ? " " : "") << nodes[i];
  std::cout << "\n";
  return kExitOk;
}

std::string kind_name(layout::NodeKind kind) {
  switch (kind) {
    case layout::NodeKind::C: return "C";
    case layout::NodeKind::Y: return "Y";
    default: return "Leaf";
  }
}

std::string region_text(const layout::StandardRegion& region) {
  std::string out;
  for (int i = 0; i < region.count; ++i) {
    if (i) out += "∪";  // ∪
    out += "[" + std::to_string(region.pieces[i].b) + "," +
           std::to_string(region.pieces[i].e) + "]";
  }
  return out;
}

int cmd_layout(std::uint64_t n, std::optional<std::uint64_t> node) {
  auto row = [&](std::uint64_t x) {
    return kind_name(layout::node_kind(x, n)) + " h=" +
           std::to_string(layout::height(x, n)) + " region=" +
           region_text(layout::standard_region(x, n));
  };
  if (node) {
    std::cout << row(*node) << "\n";
  } else {
    for (std::uint64_t x = 1; x <= 2 * n - 1; ++x)
      std::cout << "x=" << x << " " << row(x) << "\n";
  }
  return kExitOk;
}

// -- bench --

struct BenchRow {
  std::string impl;
  std::string op;
  std::uint64_t count = 0;
  std::uint64_t total_ns = 0;
};

struct EndState {
  std::vector<NodePayload> payloads;      // heap impls only
  std::vector<std::int64_t> stab_profile; // sampled stab counts
  std::int64_t stab_checksum = 0;         // sum of all trace stab answers
};

constexpr const char* kOpNames[3] = {"insert", "delete", "stab"};

template <typename InsertFn, typename DeleteFn, typename StabFn>
EndState run_trace(const io::Generated& gen,
                   const std::vector<IndexInterval>& mapped,
                   const EndpointArray& x, InsertFn ins, DeleteFn del,
                   StabFn stab, std::array<std::uint64_t, 3>* ns,
                   std::array<std::uint64_t, 3>* counts) {
  using clock = std::chrono::steady_clock;
  EndState state;
  for (const io::TraceOp& op : gen.trace) {
    const int kind = static_cast<int>(op.kind);
    const auto before = clock::now();
    switch (op.kind) {
      case io::TraceOp::Kind::Insert:
        ins(mapped[op.index]);
        break;
      case io::TraceOp::Kind::Delete:
        del(mapped[op.index]);
        break;
      case io::TraceOp::Kind::Stab:
        state.stab_checksum += stab(op.query);
        break;
    }
    const auto after = clock::now();
    if (ns) {
      (*ns)[kind] += std::chrono::duration_cast<std::chrono::nanoseconds>(
                         after - before)
                         .count();
      (*counts)[kind] += 1;
    }
  }
  // Sampled stab profile over the coordinate range, for the
  // cross-implementation end-state comparison.
  const std::uint64_t n = x.size() - 1;
  const std::uint64_t samples = std::min<std::uint64_t>(n, 2048);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t elem = i * n / samples;
    state.stab_profile.push_back(stab(x[elem + 1]));
  }
  return state;
}

int cmd_bench(std::size_t n, std::size_t ops, std::uint64_t seed,
              const std::vector<Impl>& impls,
              const std::vector<std::string>& impl_names,
              const std::string& format, const std::vector<double>& mix) {
  io::Workload workload;
  workload.seed = seed;
  workload.n = n;
  workload.ops = ops;
  workload.insert_weight = mix[0];
  workload.delete_weight = mix[1];
  workload.stab_weight = mix[2];
  const io::Generated gen = io::generate(workload);
  const io::Normalized norm = io::normalize(gen.set);
  log_line("workload generated: n=" + std::to_string(n) +
           " ops=" + std::to_string(gen.trace.size()));

  std::vector<BenchRow> rows;
  std::vector<EndState> states;
  for (std::size_t which = 0; which < impls.size(); ++which) {
    const Impl impl = impls[which];
    std::array<std::uint64_t, 3> best_ns{};
    std::array<std::uint64_t, 3> counts{};
    EndState state;
    // One warm-up pass, then three measured repetitions; keep the fastest.
    for (int rep = 0; rep < 4 && !norm.x.empty(); ++rep) {
      std::array<std::uint64_t, 3> ns{};
      std::array<std::uint64_t, 3> reps_counts{};
      const bool measured = rep > 0;
      if (impl == Impl::Linked) {
        ReferenceTree tree(norm.x.size() - 1);
        state = run_trace(
            gen, norm.intervals, norm.x,
            [&](const IndexInterval& iv) { tree.insert(iv.b, iv.e); },
            [&](const IndexInterval& iv) { tree.remove(iv.b, iv.e); },
            [&](double q) { return linked_stab(tree, norm.x, q); },
            measured ? &ns : nullptr, measured ? &reps_counts : nullptr);
      } else {
        HeapSegmentTree tree(norm.x);
        const bool rec = impl == Impl::HeapRec;
        state = run_trace(
            gen, norm.intervals, norm.x,
            [&](const IndexInterval& iv) {
              rec ? tree.insert_recursive(iv.b, iv.e)
                  : bottom_up::insert_iterative(tree, iv.b, iv.e);
            },
            [&](const IndexInterval& iv) {
              rec ? tree.delete_recursive(iv.b, iv.e)
                  : bottom_up::delete_iterative(tree, iv.b, iv.e);
            },
            [&](double q) {
              return rec ? tree.stab_recursive(q)
                         : bottom_up::stab_iterative(tree, q);
            },
            measured ? &ns : nullptr, measured ? &reps_counts : nullptr);
        state.payloads.assign(tree.payloads().begin(), tree.payloads().end());
      }
      if (measured) {
        counts = reps_counts;
        for (int k = 0; k < 3; ++k)
          best_ns[k] = rep == 1 ? ns[k] : std::min(best_ns[k], ns[k]);
      }
    }
    states.push_back(std::move(state));
    if (ops > 0)
      for (int k = 0; k < 3; ++k)
        rows.push_back(
            BenchRow{impl_names[which], kOpNames[k], counts[k], best_ns[k]});
    log_line("measured " + impl_names[which]);
  }

  // End states must agree across implementations before reporting.
  for (std::size_t i = 1; i < states.size(); ++i) {
    const bool heap_pair =
        !states[i].payloads.empty() && !states[0].payloads.empty();
    if (states[i].stab_checksum != states[0].stab_checksum ||
        states[i].stab_profile != states[0].stab_profile ||
        (heap_pair && states[i].payloads != states[0].payloads)) {
      std::cerr << "cross-implementation end states disagree ("
                << impl_names[0] << " vs " << impl_names[i] << ")\n";
      return kExitMismatch;
    }
  }

  const auto now = std::chrono::system_clock::now().time_since_epoch();
  const std::uint64_t timestamp =
      std::chrono::duration_cast<std::chrono::seconds>(now).count();
  if (format == "json") {
    nlohmann::json doc;
    doc["meta"] = {{"seed", seed},
                   {"n", n},
                   {"N", norm.x.empty() ? 0 : norm.x.size() - 1},
                   {"ops", ops},
                   {"timestamp", timestamp}};
    doc["rows"] = nlohmann::json::array();
    for (const BenchRow& row : rows)
      doc["rows"].push_back(
          {{"impl", row.impl},
           {"op", row.op},
           {"count", row.count},
           {"total_ns", row.total_ns},
           {"ns_per_op",
            row.count ? static_cast<double>(row.total_ns) / row.count : 0.0}});
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "impl\top\tcount\ttotal_ns\tns_per_op\n";
    for (const BenchRow& row : rows)
      std::cout << row.impl << "\t" << row.op << "\t" << row.count << "\t"
                << row.total_ns << "\t"
                << io::format_number(
                       row.count ? static_cast<double>(row.total_ns) / row.count
                                 : 0.0)
                << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heap-layout segment tree toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string format_name;
  bool check = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "interval file")->required();
    cmd->add_option("--format", format_name, "csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_flag("--check", check, "cross-verify against the oracle");
  };
  auto chosen_format = [&]() -> std::optional<io::Format> {
    if (format_name == "csv") return io::Format::Csv;
    if (format_name == "jsonl") return io::Format::Jsonl;
    return std::nullopt;
  };

  CLI::App* stats = app.add_subcommand("stats", "n, N, union measure, max clique");
  add_input(stats);

  CLI::App* stab = app.add_subcommand("stab", "stabbing counts for queries");
  add_input(stab);
  std::vector<double> queries;
  std::string impl_name = "heap-iter";
  stab->add_option("--query", queries, "query points")
      ->required()
      ->delimiter(',');
  stab->add_option("--impl", impl_name, "heap-rec|heap-iter|linked")
      ->check(CLI::IsMember({"heap-rec", "heap-iter", "linked"}));

  CLI::App* cover = app.add_subcommand("cover", "canonical covering of (b, e)");
  std::uint64_t cover_n = 0, cover_b = 0, cover_e = 0;
  std::string cover_impl = "heap";
  cover->add_option("--n", cover_n, "universe size N")->required();
  cover->add_option("--b", cover_b, "left endpoint index")->required();
  cover->add_option("--e", cover_e, "right endpoint index")->required();
  cover->add_option("--impl", cover_impl, "heap|linked")
      ->check(CLI::IsMember({"heap", "linked"}));

  CLI::App* layout_cmd = app.add_subcommand("layout", "structural table");
  std::uint64_t layout_n = 0;
  std::optional<std::uint64_t> layout_node;
  layout_cmd->add_option("--n", layout_n, "universe size N")->required();
  layout_cmd->add_option("--node", layout_node, "single node to describe");

  CLI::App* bench = app.add_subcommand("bench", "seeded benchmark harness");
  std::size_t bench_n = 1000, bench_ops = 10000;
  std::uint64_t bench_seed = 1;
  std::vector<std::string> bench_impls = {"heap-rec", "heap-iter"};
  std::string bench_format = "tsv";
  std::vector<double> bench_mix = {0.45, 0.25, 0.30};
  bench->add_option("--n", bench_n, "intervals in the workload");
  bench->add_option("--ops", bench_ops, "operations in the trace");
  bench->add_option("--seed", bench_seed, "workload seed");
  bench->add_option("--impl", bench_impls, "implementations to run")
      ->delimiter(',');
  bench->add_option("--format", bench_format, "tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));
  bench->add_option("--mix", bench_mix, "insert,delete,stab weights")
      ->delimiter(',')
      ->expected(3);

  try {
    app.parse(argc, argv);
    if (stats->parsed()) return cmd_stats(input, chosen_format(), check);
    if (stab->parsed())
      return cmd_stab(input, chosen_format(), queries, parse_impl(impl_name),
                      check);
    if (cover->parsed()) {
      if (cover_n == 0) throw std::invalid_argument("--n must be positive");
      return cmd_cover(cover_n, cover_b, cover_e,
                       cover_impl == "linked" ? Impl::Linked : Impl::HeapIter);
    }
    if (layout_cmd->parsed()) {
      if (layout_n == 0) throw std::invalid_argument("--n must be positive");
      return cmd_layout(layout_n, layout_node);
    }
    if (bench->parsed()) {
      std::vector<Impl> impls;
      for (const std::string& name : bench_impls)
        impls.push_back(parse_impl(name));
      if (impls.empty()) throw std::invalid_argument("no implementations");
      return cmd_bench(bench_n, bench_ops, bench_seed, impls, bench_impls,
                       bench_format, bench_mix);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  } catch (const segtree::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
