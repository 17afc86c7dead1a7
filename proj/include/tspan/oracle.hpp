#ifndef TSPAN_ORACLE_HPP
#define TSPAN_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tspan/graph.hpp"
#include "tspan/spanner.hpp"

namespace tspan {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an instance is too large for exhaustive enumeration. The
/// oracle refuses rather than truncating: a partial enumeration would not be
/// ground truth.
class RefusedInstance : public std::runtime_error {
 public:
  explicit RefusedInstance(const std::string& what) : std::runtime_error(what) {}
};

/// Exact spanning tree count via the matrix-tree determinant, evaluated with
/// fraction-free Gaussian elimination over exact big integers.
inline BigInt count_spanning_trees(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 1;
  const int m = n - 1;  // minor: drop row/column of vertex n-1
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m),
                                     std::vector<BigInt>(static_cast<std::size_t>(m), 0));
  for (int v = 0; v < m; ++v) a[v][v] = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    if (u < m && v < m) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss: exact integer division at every step
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == -1) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int r = k + 1; r < m; ++r) {
      for (int c = k + 1; c < m; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
  return sign > 0 ? det : -det;
}

/// Ground truth for one graph: the minimum over all spanning trees of the max
/// per-edge stretch, plus a witness tree and the number of trees examined.
struct OracleResult {
  static constexpr int kInfiniteStretch = std::numeric_limits<int>::max();

  int min_stretch = kInfiniteStretch;
  std::optional<VertexSubgraph> witness_tree;
  std::int64_t trees_enumerated = 0;
};

namespace detail {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

/// Max stretch of `tree_edges` (a spanning tree of g), cutting the evaluation
/// off as soon as it reaches `give_up_at` (the running best cannot be beaten
/// then). Returns the exact value when it is below the cutoff.
inline int tree_stretch_with_cutoff(const Graph& g, const std::vector<Edge>& tree_edges,
                                    int give_up_at) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
  for (const auto& [u, v] : tree_edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  // tree_edges arrive in ascending canonical order from the enumeration
  auto in_tree = [&tree_edges](const Edge& e) {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
  };
  int max_d = tree_edges.empty() ? 0 : 1;
  std::vector<int> dist(static_cast<std::size_t>(g.n()));
  int cached_source = -1;
  for (const auto& e : g.edges()) {
    if (in_tree(e)) continue;
    if (e.first != cached_source) {
      cached_source = e.first;
      std::fill(dist.begin(), dist.end(), -1);
      dist[static_cast<std::size_t>(e.first)] = 0;
      std::queue<int> q;
      q.push(e.first);
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
          if (dist[static_cast<std::size_t>(w)] == -1) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            q.push(w);
          }
        }
      }
    }
    max_d = std::max(max_d, dist[static_cast<std::size_t>(e.second)]);
    if (max_d >= give_up_at) return max_d;
  }
  return max_d;
}

}  // namespace detail

/// Enumerates every spanning tree of g exactly once (include/exclude
/// recursion over the canonical edge order, pruned by cycle and connectivity
/// tests) and returns the minimum stretch with the first witness in
/// enumeration order. Refuses instances with more than `cap` trees.
inline OracleResult min_stretch_spanning_tree(const Graph& g, std::int64_t cap = 1000000) {
  if (g.n() == 0) throw std::invalid_argument("min_stretch_spanning_tree: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("min_stretch_spanning_tree: disconnected graph");
  const BigInt total = count_spanning_trees(g);
  if (total > cap)
    throw RefusedInstance("min_stretch_spanning_tree: " + total.str() +
                          " spanning trees exceed cap " + std::to_string(cap));

  OracleResult res;
  const int n = g.n();
  if (n == 1) {
    res.min_stretch = 0;
    res.witness_tree = whole_subgraph(g);
    res.trees_enumerated = 1;
    return res;
  }
  const auto& all = g.edges();
  const int m = static_cast<int>(all.size());
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(n - 1));
  std::vector<int> all_vertices(static_cast<std::size_t>(n));
  std::iota(all_vertices.begin(), all_vertices.end(), 0);

  // connectivity of (chosen + undecided edges from idx on); uf arrives as a
  // scratch copy and is consumed
  auto still_spannable = [&](int idx, detail::DisjointSet& uf) {
    int comps = 0;
    for (int v = 0; v < n; ++v)
      if (uf.find(v) == v) ++comps;
    for (int i = idx; i < m && comps > 1; ++i) {
      if (uf.unite(all[static_cast<std::size_t>(i)].first, all[static_cast<std::size_t>(i)].second))
        --comps;
    }
    return comps == 1;
  };

  auto evaluate_leaf = [&]() {
    ++res.trees_enumerated;
    const int s = detail::tree_stretch_with_cutoff(g, chosen, res.min_stretch);
    if (s < res.min_stretch) {
      res.min_stretch = s;
      res.witness_tree = VertexSubgraph::make_raw(g.host_id(), n, all_vertices, chosen);
    }
  };

  std::function<void(int, detail::DisjointSet&)> rec = [&](int idx, detail::DisjointSet& uf) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      evaluate_leaf();
      return;
    }
    if (idx == m) return;
    const Edge e = all[static_cast<std::size_t>(idx)];
    // include e if it joins two components
    if (uf.find(e.first) != uf.find(e.second)) {
      detail::DisjointSet uf2 = uf;
      uf2.unite(e.first, e.second);
      chosen.push_back(e);
      rec(idx + 1, uf2);
      chosen.pop_back();
    }
    // exclude e if the rest can still span
    detail::DisjointSet uf3 = uf;
    if (still_spannable(idx + 1, uf3)) {
      rec(idx + 1, uf);
    }
  };
  detail::DisjointSet uf(n);
  rec(0, uf);

  if (res.trees_enumerated != static_cast<std::int64_t>(total))
    throw std::logic_error("min_stretch_spanning_tree: enumeration disagrees with the determinant count");
  return res;
}

/// True iff g has a spanning tree of stretch <= t. For t = 1 this coincides
/// with g being a tree.
inline bool oracle_decide(const Graph& g, int t, std::int64_t cap = 1000000) {
  if (t < 1) throw std::invalid_argument("oracle_decide: t must be >= 1");
  return min_stretch_spanning_tree(g, cap).min_stretch <= t;
}

}  // namespace tspan

#endif  // TSPAN_ORACLE_HPP
