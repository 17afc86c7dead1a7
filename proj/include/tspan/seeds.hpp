#ifndef TSPAN_SEEDS_HPP
#define TSPAN_SEEDS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspan/graph.hpp"
#include "tspan/spanner.hpp"

namespace tspan {

/// Thrown when a seed enumeration would explore more candidate subtrees than
/// the configured budget. Distinct from a negative answer: callers must not
/// read it as "does not admit".
class SeedBudgetExceeded : public std::runtime_error {
 public:
  explicit SeedBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kDefaultSeedBudget = 1 << 20;

/// A primary partial solution: a subtree of the host with `center` within
/// tree distance `radius` of every tree vertex, valid as a tree t-spanner of
/// the host subgraph induced by its vertices.
struct SeedTree {
  int center = 0;
  int radius = 0;
  VertexSubgraph tree;
};

/// 2^(delta^(2 + floor(t/2))), saturating at the int64 max sentinel. Only a
/// test assertion and budget-warning aid, never an allocation size.
inline std::int64_t seed_count_bound(int delta, int t) {
  if (delta < 0 || t < 2) throw std::invalid_argument("seed_count_bound: need delta >= 0, t >= 2");
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  const int exp = 2 + t / 2;
  std::int64_t power = 1;  // delta^exp
  for (int i = 0; i < exp; ++i) {
    if (delta != 0 && power > kMax / delta) return kMax;
    power *= delta;
  }
  if (power >= 63) return kMax;
  return std::int64_t{1} << power;
}

/// delta^(2 + floor(t/2)) + delta, saturating; bounds the number of
/// components hanging off any single seed.
inline std::int64_t pending_component_bound(int delta, int t) {
  if (delta < 0 || t < 2)
    throw std::invalid_argument("pending_component_bound: need delta >= 0, t >= 2");
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  const int exp = 2 + t / 2;
  std::int64_t power = 1;
  for (int i = 0; i < exp; ++i) {
    if (delta != 0 && power > kMax / delta) return kMax;
    power *= delta;
  }
  if (power > kMax - delta) return kMax;
  return power + delta;
}

namespace detail {

/// Enumerates every subtree of g that contains root and keeps all vertices
/// within tree depth `radius` of it, each exactly once. Partition scheme: at
/// each level the i-th eligible frontier edge is taken only after the first
/// i-1 have been excluded, so no edge set is produced twice. Edges only ever
/// attach new vertices, which keeps every intermediate state a tree and makes
/// insertion depth final.
class RootedSubtreeEnumerator {
 public:
  RootedSubtreeEnumerator(const Graph& g, int root, int radius, std::int64_t budget)
      : g_(g), root_(root), radius_(radius), budget_(budget) {
    depth_.assign(static_cast<std::size_t>(g.n()), -1);
  }

  template <typename Sink>
  void run(Sink&& sink) {
    depth_[static_cast<std::size_t>(root_)] = 0;
    tree_vertices_ = {root_};
    tree_edges_.clear();
    explored_ = 0;
    std::vector<Edge> ext;
    if (radius_ > 0)
      for (int w : g_.neighbors(root_)) ext.push_back(make_edge(root_, w));
    extend(ext, sink);
    depth_[static_cast<std::size_t>(root_)] = -1;
  }

  std::int64_t explored() const { return explored_; }

 private:
  bool in_tree(int v) const { return depth_[static_cast<std::size_t>(v)] >= 0; }

  template <typename Sink>
  void extend(const std::vector<Edge>& ext, Sink& sink) {
    if (++explored_ > budget_)
      throw SeedBudgetExceeded("seed enumeration for vertex " + std::to_string(root_) +
                               " exceeded budget of " + std::to_string(budget_) +
                               " candidate subtrees");
    sink(tree_vertices_, tree_edges_);
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const Edge e = ext[i];
      const bool first_in = in_tree(e.first);
      const bool second_in = in_tree(e.second);
      if (first_in && second_in) continue;  // would close a cycle, never usable
      const int anchor = first_in ? e.first : e.second;
      const int fresh = first_in ? e.second : e.first;
      const int d = depth_[static_cast<std::size_t>(anchor)] + 1;
      if (d > radius_) continue;
      depth_[static_cast<std::size_t>(fresh)] = d;
      tree_vertices_.push_back(fresh);
      tree_edges_.push_back(e);
      std::vector<Edge> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
      if (d < radius_) {
        for (int w : g_.neighbors(fresh)) {
          if (!in_tree(w)) next.push_back(make_edge(fresh, w));
        }
      }
      extend(next, sink);
      tree_edges_.pop_back();
      tree_vertices_.pop_back();
      depth_[static_cast<std::size_t>(fresh)] = -1;
    }
  }

  const Graph& g_;
  int root_;
  int radius_;
  std::int64_t budget_;
  std::int64_t explored_ = 0;
  std::vector<int> depth_;
  std::vector<int> tree_vertices_;
  std::vector<Edge> tree_edges_;
};

}  // namespace detail

/// All subtrees S of g such that S is a tree containing v with every vertex
/// within tree distance floor(t/2) of v, and S is a tree t-spanner of the
/// subgraph of g induced by V(S). Canonical order: fewer edges first, ties by
/// lexicographic sorted edge list, so the single-vertex seed {v} comes first.
/// For radius 1 (t in {2, 3}) this reduces to the stars on v and a subset of
/// its neighbors.
inline std::vector<SeedTree> enumerate_seeds(const Graph& g, int v, int t,
                                             std::int64_t budget = kDefaultSeedBudget) {
  if (t < 2) throw std::invalid_argument("enumerate_seeds: t must be >= 2");
  if (v < 0 || v >= g.n()) throw std::invalid_argument("enumerate_seeds: vertex out of range");
  const int radius = t / 2;

  std::vector<std::vector<Edge>> edge_sets;
  detail::RootedSubtreeEnumerator enumerator(g, v, radius, budget);
  enumerator.run([&](const std::vector<int>& /*verts*/, const std::vector<Edge>& es) {
    std::vector<Edge> sorted = es;
    std::sort(sorted.begin(), sorted.end());
    edge_sets.push_back(std::move(sorted));
  });
  // canonical order: smaller trees first, ties by lexicographic edge list
  std::sort(edge_sets.begin(), edge_sets.end(),
            [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<SeedTree> out;
  for (auto& es : edge_sets) {
    std::vector<int> vs{v};
    for (const auto& [a, b] : es) {
      vs.push_back(a);
      vs.push_back(b);
    }
    VertexSubgraph tree = VertexSubgraph::make_raw(g.host_id(), g.n(), std::move(vs), std::move(es));
    // seeds must span their own induced subgraph within stretch t
    if (!is_tree_t_spanner(tree, induced_from_host(g, tree.vertices()), t)) continue;
    out.push_back(SeedTree{v, radius, std::move(tree)});
  }
  return out;
}

}  // namespace tspan

#endif  // TSPAN_SEEDS_HPP
