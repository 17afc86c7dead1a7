#ifndef TSPAN_IO_HPP
#define TSPAN_IO_HPP

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tspan/engine.hpp"
#include "tspan/graph.hpp"
#include "tspan/spanner.hpp"

namespace tspan {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Edge-list format: first data line "n m", then m lines "u v" with 0-based
/// ids. Blank lines and text after '#' are ignored.
inline Graph read_edge_list(std::istream& in, const std::string& name = "<stream>") {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& why) {
    throw ParseError(name + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) continue;  // blank/comment line before the header
      if (!(ls >> m)) fail("expected 'n m' header");
      if (n < 0 || m < 0) fail("negative counts in header");
      std::string rest;
      if (ls >> rest) fail("trailing tokens after header");
      continue;
    }
    long long u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) fail("expected 'u v' edge line");
    std::string rest;
    if (ls >> rest) fail("trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
    if (u == v) fail("loop edge");
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    if (static_cast<long long>(edges.size()) > m) fail("more edges than the header promised");
  }
  if (n < 0) throw ParseError(name + ": missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(name + ": expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph::make(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(name + ": " + e.what());
  }
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return read_edge_list(in, path);
}

inline void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  write_edge_list(out, g.n(), g.edges());
}

inline void write_edge_list(std::ostream& out, const VertexSubgraph& s) {
  write_edge_list(out, s.host_n(), s.edges());
}

/// DOT rendering of a graph, optionally with a spanning tree: tree edges are
/// drawn solid, the remaining graph edges dashed, and the max-stretch witness
/// edge labeled with its tree distance.
inline void write_dot(std::ostream& out, const Graph& g, const VertexSubgraph* tree = nullptr,
                      const StretchReport* stretch = nullptr) {
  out << "graph {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    std::vector<std::string> attrs;
    if (tree != nullptr && !tree->contains_edge({u, v})) attrs.push_back("style=dashed");
    if (stretch != nullptr && stretch->witness_edge && *stretch->witness_edge == Edge{u, v})
      attrs.push_back("label=\"stretch " + std::to_string(stretch->max_stretch) + "\"");
    if (!attrs.empty()) {
      out << " [" << attrs[0];
      for (std::size_t i = 1; i < attrs.size(); ++i) out << ", " << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
}

inline nlohmann::json tree_to_json(const VertexSubgraph& tree) {
  nlohmann::json j;
  j["n"] = tree.host_n();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : tree.edges()) j["edges"].push_back({u, v});
  return j;
}

inline Graph tree_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0), e.at(1)));
  return Graph::make(j.at("n"), std::move(edges));
}

/// Machine-readable outcome of one CLI run. The key set is fixed (see
/// docs/report-schema.md); absent values are null, never missing keys, so
/// reports parse into a stable shape.
struct RunReport {
  std::string command;
  std::string input;
  int n = 0;
  int m = 0;
  int t = 0;
  std::string outcome;  // admits | does_not_admit | aborted | refused
  std::string detail;
  std::optional<int> stretch;
  std::optional<int> min_stretch;
  std::optional<std::int64_t> trees_enumerated;
  int stage_reached = 0;
  double seed_enum_ms = 0.0;
  double dp_ms = 0.0;
  double check_ms = 0.0;
  EngineStats counters;
};

inline nlohmann::json report_to_json(const RunReport& r, bool redact_timings) {
  nlohmann::json j;
  j["schema"] = "tspan-report-v1";
  j["command"] = r.command;
  j["input"] = r.input;
  j["n"] = r.n;
  j["m"] = r.m;
  j["t"] = r.t;
  j["outcome"] = r.outcome;
  j["detail"] = r.detail;
  j["stretch"] = r.stretch ? nlohmann::json(*r.stretch) : nlohmann::json(nullptr);
  j["min_stretch"] = r.min_stretch ? nlohmann::json(*r.min_stretch) : nlohmann::json(nullptr);
  j["trees_enumerated"] =
      r.trees_enumerated ? nlohmann::json(*r.trees_enumerated) : nlohmann::json(nullptr);
  j["stage_reached"] = r.stage_reached;
  j["timings_ms"] = {
      {"seed_enum", redact_timings ? 0.0 : r.seed_enum_ms},
      {"dp", redact_timings ? 0.0 : r.dp_ms},
      {"check", redact_timings ? 0.0 : r.check_ms},
  };
  j["counters"] = {
      {"seeds_enumerated", r.counters.seeds_enumerated},
      {"keys_created", r.counters.keys_created},
      {"aux_graphs_built", r.counters.aux_graphs_built},
      {"spanner_checks", r.counters.spanner_checks},
      {"max_seeds_per_vertex", r.counters.max_seeds_per_vertex},
      {"max_pending_per_key", r.counters.max_pending_per_key},
  };
  return j;
}

}  // namespace tspan

#endif  // TSPAN_IO_HPP
