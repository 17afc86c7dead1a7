// Command-line front end: decide whether a graph admits a tree t-spanner and
// construct one, run the exhaustive min-stretch oracle, cross-check the two
// on whole graph families, and benchmark scaling.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tspan/engine.hpp"
#include "tspan/generators.hpp"
#include "tspan/graph.hpp"
#include "tspan/io.hpp"
#include "tspan/oracle.hpp"
#include "tspan/spanner.hpp"

namespace {

constexpr int kExitAdmits = 0;
constexpr int kExitDoesNotAdmit = 1;
constexpr int kExitAborted = 2;
constexpr int kExitUsage = 64;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::int64_t default_seed_budget() {
  if (const char* env = std::getenv("TSPAN_SEED_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (...) {
      std::cerr << "warning: ignoring unparsable TSPAN_SEED_BUDGET='" << env << "'\n";
    }
  }
  return tspan::kDefaultSeedBudget;
}

void write_text(const std::string& dest, const std::string& text) {
  if (dest == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(dest);
  if (!out) throw std::runtime_error("cannot open output file " + dest);
  out << text;
}

std::string render_tree(const std::string& format, const tspan::Graph& g,
                        const tspan::VertexSubgraph& tree) {
  std::ostringstream os;
  if (format == "edges") {
    tspan::write_edge_list(os, tree);
  } else if (format == "json") {
    os << tspan::tree_to_json(tree).dump(2) << '\n';
  } else if (format == "dot") {
    if (g.m() > 0) {
      const tspan::StretchReport rep = tspan::tree_stretch(tree, tspan::whole_subgraph(g));
      tspan::write_dot(os, g, &tree, &rep);
    } else {
      tspan::write_dot(os, g, &tree);
    }
  } else {
    throw std::runtime_error("unknown emit format " + format);
  }
  return os.str();
}

struct CommonIo {
  std::string emit = "edges";
  std::string out = "-";
  std::string report_path;
  bool redact_timings = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--emit", emit, "tree output format: edges, json, or dot")
        ->check(CLI::IsMember({"edges", "json", "dot"}));
    cmd->add_option("--out", out, "where to write the tree ('-' for stdout)");
    cmd->add_option("--report", report_path, "write a JSON run report ('-' for stdout)");
    cmd->add_flag("--redact-timings", redact_timings,
                  "zero the timing fields so reports compare byte-for-byte");
  }

  void finish(const tspan::RunReport& report) const {
    if (report_path.empty()) return;
    write_text(report_path, tspan::report_to_json(report, redact_timings).dump(2) + "\n");
  }
};

std::string outcome_name(tspan::Outcome o) {
  switch (o) {
    case tspan::Outcome::admits:
      return "admits";
    case tspan::Outcome::does_not_admit:
      return "does_not_admit";
    case tspan::Outcome::aborted:
      return "aborted";
  }
  return "unknown";
}

int run_decide(const std::string& input, int t, const std::string& forced_path,
               const tspan::EngineOptions& opts, const CommonIo& io) {
  const tspan::Graph g = tspan::read_edge_list_file(input);
  tspan::RunReport report;
  report.command = "decide";
  report.input = input;
  report.n = g.n();
  report.m = g.m();
  report.t = t;

  const auto t0 = Clock::now();
  tspan::Decision decision;
  if (forced_path.empty()) {
    decision = tspan::decide_tree_t_spanner(g, t, opts);
  } else {
    const tspan::Graph ft = tspan::read_edge_list_file(forced_path);
    if (ft.n() != g.n())
      throw tspan::ParseError(forced_path + ": forced tree has a different vertex count");
    std::vector<int> vs;
    if (ft.m() == 0) {
      vs.push_back(0);  // vertex-only constraint: anchor at vertex 0
    } else {
      for (const auto& [u, v] : ft.edges()) {
        vs.push_back(u);
        vs.push_back(v);
      }
    }
    const tspan::VertexSubgraph forced = tspan::VertexSubgraph::make(g, std::move(vs), ft.edges());
    decision = tspan::decide_with_forced_subtree(g, t, forced, opts);
  }
  const double total_ms = ms_since(t0);

  report.outcome = outcome_name(decision.outcome);
  report.detail = decision.detail;
  report.stage_reached = decision.stats.stage_reached;
  report.counters = decision.stats;
  report.seed_enum_ms = decision.stats.seed_enum_ms;
  report.dp_ms = std::max(0.0, total_ms - decision.stats.seed_enum_ms);

  int exit_code = kExitDoesNotAdmit;
  if (decision.outcome == tspan::Outcome::admits) {
    exit_code = kExitAdmits;
    const auto t1 = Clock::now();
    const tspan::VertexSubgraph& tree = *decision.tree;
    if (g.m() > 0) {
      const tspan::StretchReport rep = tspan::tree_stretch(tree, tspan::whole_subgraph(g));
      report.stretch = rep.max_stretch;
    } else {
      report.stretch = 0;
    }
    report.check_ms = ms_since(t1);
    write_text(io.out, render_tree(io.emit, g, tree));
    std::cerr << "admits: tree t-spanner with stretch " << *report.stretch << " found at stage "
              << decision.stages << "\n";
  } else if (decision.outcome == tspan::Outcome::aborted) {
    exit_code = kExitAborted;
    std::cerr << "aborted: " << decision.detail << "\n";
  } else {
    std::cerr << "does not admit a tree " << t << "-spanner";
    if (!decision.detail.empty()) std::cerr << " (" << decision.detail << ")";
    std::cerr << "\n";
  }
  io.finish(report);
  return exit_code;
}

int run_oracle(const std::string& input, std::optional<int> t, std::int64_t cap,
               const CommonIo& io) {
  const tspan::Graph g = tspan::read_edge_list_file(input);
  tspan::RunReport report;
  report.command = "oracle";
  report.input = input;
  report.n = g.n();
  report.m = g.m();
  report.t = t.value_or(0);

  if (g.n() == 0 || !tspan::is_connected(g)) {
    report.outcome = "does_not_admit";
    report.detail = "disconnected graph: no spanning tree exists";
    report.min_stretch = tspan::OracleResult::kInfiniteStretch;
    std::cerr << "disconnected: min stretch is infinite\n";
    io.finish(report);
    return kExitDoesNotAdmit;
  }

  const auto t0 = Clock::now();
  tspan::OracleResult res;
  try {
    res = tspan::min_stretch_spanning_tree(g, cap);
  } catch (const tspan::RefusedInstance& e) {
    report.outcome = "refused";
    report.detail = e.what();
    std::cerr << "refused: " << e.what() << "\n";
    io.finish(report);
    return kExitAborted;
  }
  report.dp_ms = ms_since(t0);
  report.min_stretch = res.min_stretch;
  report.trees_enumerated = res.trees_enumerated;

  const bool ok = !t.has_value() || res.min_stretch <= *t;
  report.outcome = ok ? "admits" : "does_not_admit";
  std::cout << "min stretch " << res.min_stretch << " over " << res.trees_enumerated
            << " spanning trees\n";
  if (res.witness_tree) {
    write_text(io.out, render_tree(io.emit, g, *res.witness_tree));
  }
  io.finish(report);
  return ok ? kExitAdmits : kExitDoesNotAdmit;
}

void dump_mismatch(const tspan::Graph& g, int t, bool oracle_admits, bool engine_admits) {
  std::cerr << "MISMATCH t=" << t << " oracle=" << (oracle_admits ? "admits" : "no")
            << " engine=" << (engine_admits ? "admits" : "no") << "\n";
  tspan::write_edge_list(std::cerr, g);
}

int run_crosscheck(const std::string& family, int n, int d, int maxdeg, int extra, int count,
                   std::uint64_t seed, const std::vector<int>& ts, std::int64_t cap,
                   const tspan::EngineOptions& opts) {
  long long instances = 0, comparisons = 0, mismatches = 0;
  auto check_one = [&](const tspan::Graph& g) {
    ++instances;
    std::optional<int> min_stretch;
    if (g.n() > 0 && tspan::is_connected(g))
      min_stretch = tspan::min_stretch_spanning_tree(g, cap).min_stretch;
    for (int t : ts) {
      ++comparisons;
      const tspan::Decision dec = tspan::decide_tree_t_spanner(g, t, opts);
      if (dec.outcome == tspan::Outcome::aborted)
        throw std::runtime_error("crosscheck: engine aborted: " + dec.detail);
      const bool engine_admits = dec.outcome == tspan::Outcome::admits;
      const bool oracle_admits =
          t == 1 ? tspan::is_tree(tspan::whole_subgraph(g))
                 : (min_stretch.has_value() && *min_stretch <= t);
      if (engine_admits != oracle_admits) {
        ++mismatches;
        dump_mismatch(g, t, oracle_admits, engine_admits);
        continue;
      }
      if (engine_admits && !tspan::is_tree_t_spanner(*dec.tree, tspan::whole_subgraph(g), t)) {
        ++mismatches;
        std::cerr << "UNSOUND tree at t=" << t << "\n";
        tspan::write_edge_list(std::cerr, g);
      }
    }
  };

  if (family.empty()) {
    tspan::enumerate_small_connected(n, check_one);
  } else {
    for (int i = 0; i < count; ++i) {
      tspan::FamilySpec spec;
      spec.n = n;
      spec.d = d;
      spec.max_degree = maxdeg;
      spec.extra_edges = extra;
      spec.seed = seed + static_cast<std::uint64_t>(i);
      spec.name = family;
      if (family == "randomRegular") {
        spec.family = tspan::Family::random_regular;
      } else if (family == "randomConnectedMaxDeg") {
        spec.family = tspan::Family::random_connected_max_deg;
      } else if (family == "treePlusChords") {
        spec.family = tspan::Family::tree_plus_chords;
      } else {
        spec.family = tspan::Family::named;
      }
      check_one(tspan::generate(spec));
    }
  }
  std::cout << "crosscheck: " << instances << " instances, " << comparisons << " comparisons, "
            << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

int run_bench(const std::string& family, const std::string& sizes, const std::vector<int>& ts,
              std::uint64_t seed, int maxdeg, int extra, std::int64_t budget_ms,
              bool redact_timings) {
  std::vector<int> size_list;
  if (sizes.find(':') != std::string::npos) {
    const int a = std::stoi(sizes.substr(0, sizes.find(':')));
    const int b = std::stoi(sizes.substr(sizes.find(':') + 1));
    for (int s = a; s <= b; ++s) size_list.push_back(s);
  } else {
    std::istringstream ss(sizes);
    std::string tok;
    while (std::getline(ss, tok, ',')) size_list.push_back(std::stoi(tok));
  }

  std::cout << "family,n,max_degree,t,outcome,ms,stage,seeds,aux_built,spanner_checks\n";
  std::vector<double> log_n, log_ms;
  for (int s : size_list) {
    tspan::Graph g = [&]() {
      if (family == "grid2d") return tspan::make_grid2d(s, s);
      if (family == "cycle") return tspan::make_cycle(s);
      if (family == "path") return tspan::make_path(s);
      if (family == "complete") return tspan::make_complete(s);
      if (family == "randomConnectedMaxDeg")
        return tspan::make_random_connected_max_deg(s, maxdeg, extra, seed);
      throw std::runtime_error("bench: unknown family " + family);
    }();
    for (int t : ts) {
      tspan::EngineOptions opts;
      opts.seed_budget = default_seed_budget();
      opts.wall_clock_budget_ms = budget_ms;
      const auto t0 = Clock::now();
      const tspan::Decision dec = tspan::decide_tree_t_spanner(g, t, opts);
      const double ms = ms_since(t0);
      std::cout << family << ',' << g.n() << ',' << g.max_degree() << ',' << t << ','
                << outcome_name(dec.outcome) << ',' << (redact_timings ? 0.0 : ms) << ','
                << dec.stats.stage_reached << ',' << dec.stats.seeds_enumerated << ','
                << dec.stats.aux_graphs_built << ',' << dec.stats.spanner_checks << "\n";
      if (!redact_timings && ms > 0 && dec.outcome != tspan::Outcome::aborted) {
        log_n.push_back(std::log(static_cast<double>(g.n())));
        log_ms.push_back(std::log(ms));
      }
    }
  }
  // least-squares slope of log(ms) against log(n)
  if (log_n.size() >= 2 && !redact_timings) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(log_n.size());
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sx += log_n[i];
      sy += log_ms[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_ms[i];
    }
    const double denom = k * sxx - sx * sx;
    if (denom > 1e-12) {
      std::cout << "# loglog_slope_ms_vs_n " << (k * sxy - sx * sy) / denom << "\n";
      return 0;
    }
  }
  std::cout << "# loglog_slope_ms_vs_n na\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree t-spanner decision tool"};
  app.require_subcommand(1);

  // decide
  auto* decide = app.add_subcommand("decide", "decide tree t-spanner admissibility");
  std::string input, forced_path;
  int t = 0;
  tspan::EngineOptions opts;
  opts.seed_budget = default_seed_budget();
  CommonIo decide_io;
  decide->add_option("input", input, "edge-list file")->required();
  decide->add_option("--t", t, "stretch bound (t >= 1)")->required()->check(CLI::PositiveNumber);
  decide->add_option("--forced-tree", forced_path,
                     "edge-list file with edges the spanner must contain");
  decide->add_option("--seed-budget", opts.seed_budget, "per-vertex seed enumeration cap");
  decide->add_option("--time-budget-ms", opts.wall_clock_budget_ms,
                     "wall clock budget (0 = unlimited)");
  decide->add_flag("--debug-assertions", opts.debug_assertions,
                   "verify internal invariants after every growth step");
  decide_io.attach(decide);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive minimum-stretch spanning tree");
  std::string oracle_input;
  int oracle_t = 0;
  std::int64_t cap = 1000000;
  CommonIo oracle_io;
  oracle->add_option("input", oracle_input, "edge-list file")->required();
  auto* oracle_t_opt = oracle->add_option("--t", oracle_t, "compare the minimum against t");
  oracle->add_option("--cap", cap, "refuse instances with more spanning trees than this");
  oracle_io.attach(oracle);

  // crosscheck
  auto* cross = app.add_subcommand("crosscheck", "engine vs oracle over a corpus");
  std::string family;
  int cross_n = 5, cross_d = 3, cross_maxdeg = 4, cross_extra = 4, cross_count = 50;
  std::uint64_t cross_seed = 1;
  std::vector<int> cross_ts{2, 3};
  std::int64_t cross_cap = 1000000;
  tspan::EngineOptions cross_opts;
  cross_opts.seed_budget = default_seed_budget();
  cross->add_option("--n", cross_n, "vertex count (exhaustive mode: all connected graphs, n <= 8)");
  cross->add_option("--family", family,
                    "sample a family instead: randomRegular, randomConnectedMaxDeg, treePlusChords");
  cross->add_option("--d", cross_d, "degree for randomRegular");
  cross->add_option("--maxdeg", cross_maxdeg, "cap for randomConnectedMaxDeg");
  cross->add_option("--extra", cross_extra, "chords beyond the spanning tree");
  cross->add_option("--count", cross_count, "number of sampled instances");
  cross->add_option("--seed", cross_seed, "base RNG seed");
  cross->add_option("--t", cross_ts, "stretch bounds to compare")->delimiter(',');
  cross->add_option("--cap", cross_cap, "oracle enumeration cap");
  cross->add_flag("--debug-assertions", cross_opts.debug_assertions,
                  "verify internal invariants after every growth step");

  // bench
  auto* bench = app.add_subcommand("bench", "timing sweep over a family, CSV output");
  std::string bench_family = "grid2d", bench_sizes = "5:10";
  std::vector<int> bench_ts{3};
  std::uint64_t bench_seed = 1;
  int bench_maxdeg = 6, bench_extra = 0;
  std::int64_t bench_budget = 0;
  bool bench_redact = false;
  bench->add_option("--family", bench_family,
                    "grid2d, cycle, path, complete, randomConnectedMaxDeg");
  bench->add_option("--sizes", bench_sizes, "a:b range or comma list (grid2d: side length)");
  bench->add_option("--t", bench_ts, "stretch bounds")->delimiter(',');
  bench->add_option("--seed", bench_seed, "RNG seed for random families");
  bench->add_option("--maxdeg", bench_maxdeg, "cap for randomConnectedMaxDeg");
  bench->add_option("--extra", bench_extra, "chords for randomConnectedMaxDeg");
  bench->add_option("--budget-ms", bench_budget, "per-run wall clock budget (aborts recorded)");
  bench->add_flag("--redact-timings", bench_redact, "zero the ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decide->parsed()) return run_decide(input, t, forced_path, opts, decide_io);
    if (oracle->parsed())
      return run_oracle(oracle_input,
                        oracle_t_opt->count() > 0 ? std::optional<int>(oracle_t) : std::nullopt,
                        cap, oracle_io);
    if (cross->parsed())
      return run_crosscheck(family, cross_n, cross_d, cross_maxdeg, cross_extra, cross_count,
                            cross_seed, cross_ts, cross_cap, cross_opts);
    if (bench->parsed())
      return run_bench(bench_family, bench_sizes, bench_ts, bench_seed, bench_maxdeg, bench_extra,
                       bench_budget, bench_redact);
  } catch (const tspan::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAborted;
  }
  return kExitUsage;
}
