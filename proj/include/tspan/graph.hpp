#ifndef TSPAN_GRAPH_HPP
#define TSPAN_GRAPH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tspan {

/// Unordered edge, stored normalized as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

namespace detail {
inline std::uint64_t next_host_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}
}  // namespace detail

/// Immutable simple undirected graph. Vertices are dense ids 0..n-1. Loops
/// and parallel edges are rejected at construction. Neighbor lists are kept
/// sorted ascending so that every traversal order is reproducible.
class Graph {
 public:
  Graph() : n_(0), host_id_(detail::next_host_id()) {}

  static Graph make(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("Graph::make: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw std::invalid_argument("Graph::make: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph::make: loop edge");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("Graph::make: parallel edge");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::uint64_t host_id() const { return host_id_; }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::uint64_t host_id_;
};

/// A subgraph of a host graph, as explicit vertex and edge sets over host
/// vertex ids. Keeping host-level ids makes the cross-graph set algebra
/// (induce a subgraph of one graph on the vertices of another) well defined.
/// Vertex and edge vectors are sorted; equality is set equality per host.
class VertexSubgraph {
 public:
  VertexSubgraph() : host_id_(0), host_n_(0) {}

  static VertexSubgraph make(const Graph& host, std::vector<int> vertices, std::vector<Edge> edges) {
    return make_raw(host.host_id(), host.n(), std::move(vertices), std::move(edges));
  }

  static VertexSubgraph make_raw(std::uint64_t host_id, int host_n, std::vector<int> vertices,
                                 std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    VertexSubgraph s;
    s.host_id_ = host_id;
    s.host_n_ = host_n;
    s.vertices_ = std::move(vertices);
    s.edges_ = std::move(edges);
    for (const auto& [u, v] : s.edges_) {
      if (u < 0 || v >= host_n) throw std::invalid_argument("VertexSubgraph: edge endpoint out of host range");
      if (!s.contains_vertex(u) || !s.contains_vertex(v))
        throw std::invalid_argument("VertexSubgraph: edge endpoint not in vertex set");
    }
    if (!s.vertices_.empty() && (s.vertices_.front() < 0 || s.vertices_.back() >= host_n))
      throw std::invalid_argument("VertexSubgraph: vertex out of host range");
    return s;
  }

  static VertexSubgraph empty_of(const Graph& host) { return make(host, {}, {}); }

  static VertexSubgraph single(const Graph& host, int v) { return make(host, {v}, {}); }

  std::uint64_t host_id() const { return host_id_; }
  int host_n() const { return host_n_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  bool contains_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool contains_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  bool operator==(const VertexSubgraph& o) const {
    return host_id_ == o.host_id_ && vertices_ == o.vertices_ && edges_ == o.edges_;
  }
  bool operator!=(const VertexSubgraph& o) const { return !(*this == o); }

 private:
  std::uint64_t host_id_;
  int host_n_;
  std::vector<int> vertices_;  // sorted ascending
  std::vector<Edge> edges_;    // sorted, normalized
};

inline void require_same_host(const VertexSubgraph& a, const VertexSubgraph& b, const char* op) {
  if (a.host_id() != b.host_id())
    throw std::invalid_argument(std::string(op) + ": subgraphs of different hosts");
}

inline VertexSubgraph whole_subgraph(const Graph& g) {
  std::vector<int> vs(g.n());
  for (int i = 0; i < g.n(); ++i) vs[i] = i;
  return VertexSubgraph::make(g, std::move(vs), g.edges());
}

namespace detail {

/// Neighbor lists of a subgraph over host ids, built from its own edge set.
struct LocalAdjacency {
  explicit LocalAdjacency(const VertexSubgraph& g) {
    const auto& vs = g.vertices();
    lists.assign(vs.size(), {});
    base = &vs;
    for (const auto& [u, v] : g.edges()) {
      lists[index_of(u)].push_back(v);
      lists[index_of(v)].push_back(u);
    }
    for (auto& l : lists) std::sort(l.begin(), l.end());
  }

  std::size_t index_of(int v) const {
    return static_cast<std::size_t>(
        std::lower_bound(base->begin(), base->end(), v) - base->begin());
  }

  const std::vector<int>& of(int v) const { return lists[index_of(v)]; }

  const std::vector<int>* base;
  std::vector<std::vector<int>> lists;
};

}  // namespace detail

/// Hop distances from one source within a subgraph. Unreachable vertices
/// (including vertices outside the subgraph) carry the sentinel, never a
/// large fake number. The vector is indexed by host vertex id.
struct DistanceRow {
  static constexpr int kUnreachable = -1;

  int source = 0;
  std::vector<int> dist;  // size host_n

  bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
  int at(int v) const { return dist[static_cast<std::size_t>(v)]; }
};

inline DistanceRow bfs_distances(const VertexSubgraph& g, int source) {
  if (!g.contains_vertex(source)) throw std::invalid_argument("bfs_distances: source not in subgraph");
  DistanceRow row;
  row.source = source;
  row.dist.assign(static_cast<std::size_t>(g.host_n()), DistanceRow::kUnreachable);
  detail::LocalAdjacency adj(g);
  std::queue<int> q;
  row.dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const int du = row.dist[static_cast<std::size_t>(u)];
    for (int w : adj.of(u)) {
      if (row.dist[static_cast<std::size_t>(w)] == DistanceRow::kUnreachable) {
        row.dist[static_cast<std::size_t>(w)] = du + 1;
        q.push(w);
      }
    }
  }
  return row;
}

/// Subgraph of g induced by the vertices at g-distance <= radius from center.
inline VertexSubgraph sphere(const VertexSubgraph& g, int center, int radius) {
  if (!g.contains_vertex(center)) throw std::invalid_argument("sphere: center not in subgraph");
  if (radius < 0) throw std::invalid_argument("sphere: negative radius");
  const DistanceRow row = bfs_distances(g, center);
  std::vector<int> vs;
  for (int v : g.vertices()) {
    const int d = row.at(v);
    if (d != DistanceRow::kUnreachable && d <= radius) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    const int du = row.at(e.first), dv = row.at(e.second);
    if (du != DistanceRow::kUnreachable && du <= radius && dv != DistanceRow::kUnreachable &&
        dv <= radius)
      es.push_back(e);
  }
  return VertexSubgraph::make_raw(g.host_id(), g.host_n(), std::move(vs), std::move(es));
}

/// True iff every vertex of s is within s-distance r of v.
inline bool is_r_center(const VertexSubgraph& s, int v, int r) {
  if (!s.contains_vertex(v)) throw std::invalid_argument("is_r_center: vertex not in subgraph");
  const DistanceRow row = bfs_distances(s, v);
  for (int u : s.vertices()) {
    const int d = row.at(u);
    if (d == DistanceRow::kUnreachable || d > r) return false;
  }
  return true;
}

/// Induced subgraph of g on the vertex set h. Cross-graph convention: h need
/// not be a subset of V(g); the result lives on V(g) intersected with h.
inline VertexSubgraph induced(const VertexSubgraph& g, std::span<const int> h) {
  std::vector<int> hs(h.begin(), h.end());
  std::sort(hs.begin(), hs.end());
  std::vector<int> vs;
  std::set_intersection(g.vertices().begin(), g.vertices().end(), hs.begin(), hs.end(),
                        std::back_inserter(vs));
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (std::binary_search(vs.begin(), vs.end(), e.first) &&
        std::binary_search(vs.begin(), vs.end(), e.second))
      es.push_back(e);
  }
  return VertexSubgraph::make_raw(g.host_id(), g.host_n(), std::move(vs), std::move(es));
}

inline VertexSubgraph induced(const VertexSubgraph& g, const std::vector<int>& h) {
  return induced(g, std::span<const int>(h));
}

inline VertexSubgraph induced(const Graph& g, const std::vector<int>& h) {
  return induced(whole_subgraph(g), std::span<const int>(h));
}

/// Same as inducing on the whole host, but walks host adjacency instead of
/// scanning the full edge list; the workhorse behind the engine's inner loop.
inline VertexSubgraph induced_from_host(const Graph& g, std::span<const int> h) {
  std::vector<int> vs;
  vs.reserve(h.size());
  for (int v : h)
    if (v >= 0 && v < g.n()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto in = [&vs](int v) { return std::binary_search(vs.begin(), vs.end(), v); };
  std::vector<Edge> es;
  for (int v : vs) {
    for (int w : g.neighbors(v)) {
      if (w > v && in(w)) es.push_back({v, w});
    }
  }
  std::sort(es.begin(), es.end());
  return VertexSubgraph::make_raw(g.host_id(), g.n(), std::move(vs), std::move(es));
}

/// True iff every element of `needles` (sorted) occurs in `hay` (sorted).
inline bool contains_all_sorted(std::span<const int> hay, std::span<const int> needles) {
  std::size_t i = 0;
  for (int x : needles) {
    while (i < hay.size() && hay[i] < x) ++i;
    if (i == hay.size() || hay[i] != x) return false;
    ++i;
  }
  return true;
}

inline VertexSubgraph graph_union(const VertexSubgraph& a, const VertexSubgraph& b) {
  require_same_host(a, b, "graph_union");
  std::vector<int> vs;
  std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                 b.vertices().end(), std::back_inserter(vs));
  std::vector<Edge> es;
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(es));
  return VertexSubgraph::make_raw(a.host_id(), a.host_n(), std::move(vs), std::move(es));
}

/// Removes the vertices of b (and every incident edge) from a.
inline VertexSubgraph graph_minus_vertices(const VertexSubgraph& a, const VertexSubgraph& b) {
  require_same_host(a, b, "graph_minus_vertices");
  std::vector<int> vs;
  std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                      b.vertices().end(), std::back_inserter(vs));
  std::vector<Edge> es;
  for (const auto& e : a.edges()) {
    if (!b.contains_vertex(e.first) && !b.contains_vertex(e.second)) es.push_back(e);
  }
  return VertexSubgraph::make_raw(a.host_id(), a.host_n(), std::move(vs), std::move(es));
}

/// Removes the vertices in `drop` (and incident edges) from a.
inline VertexSubgraph minus_vertex_set(const VertexSubgraph& a, std::span<const int> drop) {
  std::vector<int> ds(drop.begin(), drop.end());
  std::sort(ds.begin(), ds.end());
  std::vector<int> vs;
  std::set_difference(a.vertices().begin(), a.vertices().end(), ds.begin(), ds.end(),
                      std::back_inserter(vs));
  std::vector<Edge> es;
  for (const auto& e : a.edges()) {
    if (!std::binary_search(ds.begin(), ds.end(), e.first) &&
        !std::binary_search(ds.begin(), ds.end(), e.second))
      es.push_back(e);
  }
  return VertexSubgraph::make_raw(a.host_id(), a.host_n(), std::move(vs), std::move(es));
}

/// Removes a single edge, keeping both endpoints.
inline VertexSubgraph graph_minus_edge(const VertexSubgraph& a, const Edge& e) {
  const Edge key = make_edge(e.first, e.second);
  std::vector<Edge> es;
  es.reserve(a.edges().size());
  for (const auto& f : a.edges())
    if (f != key) es.push_back(f);
  return VertexSubgraph::make_raw(a.host_id(), a.host_n(), a.vertices(), std::move(es));
}

/// Maximal connected induced pieces of g, ordered by smallest contained
/// vertex id.
inline std::vector<VertexSubgraph> components(const VertexSubgraph& g) {
  std::vector<VertexSubgraph> out;
  if (g.empty()) return out;
  detail::LocalAdjacency adj(g);
  const auto& vs = g.vertices();
  std::vector<char> seen(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<int> stack{vs[i]};
    seen[i] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj.of(u)) {
        const std::size_t j = adj.index_of(w);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
      if (std::binary_search(comp.begin(), comp.end(), e.first) &&
          std::binary_search(comp.begin(), comp.end(), e.second))
        es.push_back(e);
    }
    out.push_back(
        VertexSubgraph::make_raw(g.host_id(), g.host_n(), std::move(comp), std::move(es)));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

}  // namespace tspan

#endif  // TSPAN_GRAPH_HPP
