#ifndef TSPAN_SPANNER_HPP
#define TSPAN_SPANNER_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tspan/graph.hpp"

namespace tspan {

/// Connected and acyclic. The empty graph is not a tree; a single vertex is.
inline bool is_tree(const VertexSubgraph& g) {
  if (g.empty()) return false;
  if (g.num_edges() != g.num_vertices() - 1) return false;
  // with |E| = |V|-1, connectivity implies acyclicity
  detail::LocalAdjacency adj(g);
  std::vector<char> seen(g.vertices().size(), 0);
  std::vector<int> stack{g.vertices().front()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj.of(u)) {
      const std::size_t j = adj.index_of(w);
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertices().size();
}

enum class SpannerFail {
  none,
  not_subgraph,      // candidate has a vertex or edge outside g
  not_spanning,      // vertex sets differ
  not_a_tree,        // candidate is disconnected or has a cycle
  stretch_exceeded,  // some g-edge's endpoints are too far apart in the tree
};

struct SpannerCheck {
  bool ok = false;
  SpannerFail reason = SpannerFail::none;
  std::optional<Edge> witness;  // edge that violated the stretch bound

  explicit operator bool() const { return ok; }
};

/// Decides whether `cand` is a tree t-spanner of `g`: a spanning tree of g in
/// which the endpoints of every g-edge are at tree distance <= t. Only
/// adjacent pairs are examined; for spanning trees that check is equivalent
/// to the all-pairs bound. Short-circuits on the first violated edge.
inline SpannerCheck check_tree_t_spanner(const VertexSubgraph& cand, const VertexSubgraph& g,
                                         int t) {
  if (t < 1) throw std::invalid_argument("check_tree_t_spanner: t must be >= 1");
  require_same_host(cand, g, "check_tree_t_spanner");
  SpannerCheck res;

  // (a) candidate edges and vertices must exist in g; set algebra upstream is
  // re-validated here, not trusted.
  for (int v : cand.vertices()) {
    if (!g.contains_vertex(v)) {
      res.reason = SpannerFail::not_subgraph;
      return res;
    }
  }
  for (const auto& e : cand.edges()) {
    if (!g.contains_edge(e)) {
      res.reason = SpannerFail::not_subgraph;
      return res;
    }
  }
  // (b) spanning
  if (cand.vertices() != g.vertices()) {
    res.reason = SpannerFail::not_spanning;
    return res;
  }
  // (c) tree
  if (!is_tree(cand)) {
    res.reason = SpannerFail::not_a_tree;
    return res;
  }
  // (d) stretch of every g-edge, BFS in the tree per needed source, capped at
  // depth t. Tree edges are at distance 1.
  detail::LocalAdjacency adj(cand);
  std::vector<int> dist;
  int cached_source = -1;
  for (const auto& e : g.edges()) {
    if (cand.contains_edge(e)) continue;
    if (e.first != cached_source) {
      cached_source = e.first;
      dist.assign(static_cast<std::size_t>(cand.host_n()), -1);
      dist[static_cast<std::size_t>(e.first)] = 0;
      std::queue<int> q;
      q.push(e.first);
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        const int du = dist[static_cast<std::size_t>(u)];
        if (du == t) continue;  // nothing beyond depth t matters
        for (int w : adj.of(u)) {
          if (dist[static_cast<std::size_t>(w)] == -1) {
            dist[static_cast<std::size_t>(w)] = du + 1;
            q.push(w);
          }
        }
      }
    }
    const int d = dist[static_cast<std::size_t>(e.second)];
    if (d == -1 || d > t) {
      res.reason = SpannerFail::stretch_exceeded;
      res.witness = e;
      return res;
    }
  }
  res.ok = true;
  return res;
}

inline bool is_tree_t_spanner(const VertexSubgraph& cand, const VertexSubgraph& g, int t) {
  return check_tree_t_spanner(cand, g, t).ok;
}

/// Exact stretch data of a spanning tree: the maximum over host edges of the
/// tree distance of the edge's endpoints, the first edge (in canonical order)
/// attaining it, and optionally the whole per-edge map.
struct StretchReport {
  int max_stretch = 0;  // 0 only when g has no edges
  std::optional<Edge> witness_edge;
  std::vector<std::pair<Edge, int>> per_edge;  // filled only on request
};

inline StretchReport tree_stretch(const VertexSubgraph& tree, const VertexSubgraph& g,
                                  bool with_per_edge = false) {
  require_same_host(tree, g, "tree_stretch");
  if (tree.vertices() != g.vertices() || !is_tree(tree))
    throw std::invalid_argument("tree_stretch: candidate is not a spanning tree");
  for (const auto& e : tree.edges()) {
    if (!g.contains_edge(e)) throw std::invalid_argument("tree_stretch: tree edge not in graph");
  }
  StretchReport rep;
  detail::LocalAdjacency adj(tree);
  std::vector<int> dist;
  int cached_source = -1;
  for (const auto& e : g.edges()) {
    int d = 1;
    if (!tree.contains_edge(e)) {
      if (e.first != cached_source) {
        cached_source = e.first;
        dist.assign(static_cast<std::size_t>(tree.host_n()), -1);
        dist[static_cast<std::size_t>(e.first)] = 0;
        std::queue<int> q;
        q.push(e.first);
        while (!q.empty()) {
          const int u = q.front();
          q.pop();
          for (int w : adj.of(u)) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
              dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
              q.push(w);
            }
          }
        }
      }
      d = dist[static_cast<std::size_t>(e.second)];
      if (d < 0) throw std::logic_error("tree_stretch: spanning tree left an edge endpoint unreachable");
    }
    if (with_per_edge) rep.per_edge.emplace_back(e, d);
    if (d > rep.max_stretch) {
      rep.max_stretch = d;
      rep.witness_edge = e;
    }
  }
  return rep;
}

}  // namespace tspan

#endif  // TSPAN_SPANNER_HPP
