#ifndef TSPAN_GENERATORS_HPP
#define TSPAN_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspan/graph.hpp"
#include "tspan/rng.hpp"

namespace tspan {

enum class Family {
  path,
  cycle,
  complete,
  grid2d,
  random_regular,
  random_connected_max_deg,
  tree_plus_chords,
  named,
};

/// Deterministic graph family request: the same spec and seed always produce
/// the identical canonical edge list.
struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  int rows = 0, cols = 0;      // grid2d
  int d = 0;                   // random_regular
  int max_degree = 0;          // random_connected_max_deg
  int extra_edges = 0;         // chords beyond the spanning tree
  std::uint64_t seed = 0;
  std::string name;            // named: petersen, k4, c5
};

inline Graph make_path(int n) {
  if (n < 0) throw std::invalid_argument("path: negative n");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::make(n, std::move(es));
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return Graph::make(n, std::move(es));
}

inline Graph make_complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: negative n");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph::make(n, std::move(es));
}

inline Graph make_grid2d(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid2d: dimensions must be positive");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> es;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::make(rows * cols, std::move(es));
}

inline Graph make_petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    es.push_back(make_edge(i, i + 5));                // spokes
    es.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // inner pentagram
  }
  return Graph::make(10, std::move(es));
}

/// Pairing-model d-regular graph; rejects pairings with loops or parallel
/// edges and retries. Requires n*d even.
inline Graph make_random_regular(int n, int d, std::uint64_t seed, int max_retries = 2000) {
  if (n < 0 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: need 0 <= d < n with n*d even");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    std::vector<Edge> es;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ok = false;
        break;
      }
      es.push_back(make_edge(stubs[i], stubs[i + 1]));
    }
    if (!ok) continue;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) continue;
    return Graph::make(n, std::move(es));
  }
  throw std::runtime_error("random_regular: retry limit exceeded");
}

/// Random spanning tree grown by attaching each new vertex to a uniformly
/// chosen earlier vertex with remaining degree budget, then random chords,
/// all respecting the degree cap.
inline Graph make_random_connected_max_deg(int n, int max_degree, int extra_edges,
                                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_max_deg: n must be >= 1");
  if (n > 1 && max_degree < 2)
    throw std::invalid_argument("random_connected_max_deg: max_degree must be >= 2 for n > 1");
  Rng rng(seed);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    // attach v to a random earlier vertex that still has capacity
    int u = -1;
    for (int tries = 0; tries < 64 * n; ++tries) {
      const int c = rng.below_int(v);
      if (deg[static_cast<std::size_t>(c)] < max_degree) {
        u = c;
        break;
      }
    }
    if (u == -1) {
      // fall back to scanning; some vertex has capacity since max_degree >= 2
      for (int c = 0; c < v && u == -1; ++c)
        if (deg[static_cast<std::size_t>(c)] < max_degree) u = c;
      if (u == -1) throw std::runtime_error("random_connected_max_deg: no attachment point");
    }
    es.push_back(make_edge(u, v));
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::sort(es.begin(), es.end());
  auto has = [&es](const Edge& e) { return std::binary_search(es.begin(), es.end(), e); };
  int added = 0;
  long long budget = 200LL * std::max(1, extra_edges) + 200;
  while (added < extra_edges && budget-- > 0) {
    const int u = rng.below_int(n);
    const int v = rng.below_int(n);
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    if (has(e)) continue;
    if (deg[static_cast<std::size_t>(u)] >= max_degree ||
        deg[static_cast<std::size_t>(v)] >= max_degree)
      continue;
    es.insert(std::lower_bound(es.begin(), es.end(), e), e);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    ++added;
  }
  if (added < extra_edges)
    throw std::runtime_error("random_connected_max_deg: retry limit exceeded adding chords");
  return Graph::make(n, std::move(es));
}

inline Graph make_tree_plus_chords(int n, int chords, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree_plus_chords: n must be >= 1");
  Rng rng(seed);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back(make_edge(rng.below_int(v), v));
  std::sort(es.begin(), es.end());
  auto has = [&es](const Edge& e) { return std::binary_search(es.begin(), es.end(), e); };
  int added = 0;
  long long budget = 200LL * std::max(1, chords) + 200;
  while (added < chords && budget-- > 0) {
    const int u = rng.below_int(n);
    const int v = rng.below_int(n);
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    if (has(e)) continue;
    es.insert(std::lower_bound(es.begin(), es.end(), e), e);
    ++added;
  }
  if (added < chords) throw std::runtime_error("tree_plus_chords: retry limit exceeded");
  return Graph::make(n, std::move(es));
}

inline Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      return make_path(spec.n);
    case Family::cycle:
      return make_cycle(spec.n);
    case Family::complete:
      return make_complete(spec.n);
    case Family::grid2d:
      return make_grid2d(spec.rows, spec.cols);
    case Family::random_regular:
      return make_random_regular(spec.n, spec.d, spec.seed);
    case Family::random_connected_max_deg:
      return make_random_connected_max_deg(spec.n, spec.max_degree, spec.extra_edges, spec.seed);
    case Family::tree_plus_chords:
      return make_tree_plus_chords(spec.n, spec.extra_edges, spec.seed);
    case Family::named:
      if (spec.name == "petersen") return make_petersen();
      if (spec.name == "k4") return make_complete(4);
      if (spec.name == "c5") return make_cycle(5);
      throw std::invalid_argument("generate: unknown named graph '" + spec.name + "'");
  }
  throw std::invalid_argument("generate: unknown family");
}

/// Streams every connected simple graph on n labeled vertices exactly once,
/// by enumerating edge masks and filtering by connectivity. Labeled, not
/// isomorphism-reduced.
inline void enumerate_small_connected(int n, const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_small_connected: n must be in [1, 8]");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  const int m = static_cast<int>(all.size());
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    // connectivity by bit flood fill over the adjacency implied by the mask
    std::uint32_t adj[8] = {0};
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) {
        adj[all[static_cast<std::size_t>(i)].first] |= 1u << all[static_cast<std::size_t>(i)].second;
        adj[all[static_cast<std::size_t>(i)].second] |= 1u << all[static_cast<std::size_t>(i)].first;
      }
    }
    std::uint32_t reach = 1u, frontier = 1u;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1u) next |= adj[v];
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach != (1u << n) - 1u) continue;
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) es.push_back(all[static_cast<std::size_t>(i)]);
    sink(Graph::make(n, std::move(es)));
  }
}

/// Uniform-ish random connected labeled graph on n vertices: random edge
/// masks filtered by connectivity. Used for sampled corpora at sizes where
/// exhaustive enumeration is out of reach.
inline Graph random_connected_mask(int n, Rng& rng, int max_retries = 100000) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  for (int tries = 0; tries < max_retries; ++tries) {
    std::vector<Edge> es;
    for (const auto& e : all)
      if (rng.coin()) es.push_back(e);
    Graph g = Graph::make(n, std::move(es));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_mask: retry limit exceeded");
}

}  // namespace tspan

#endif  // TSPAN_GENERATORS_HPP
