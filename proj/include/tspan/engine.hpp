#ifndef TSPAN_ENGINE_HPP
#define TSPAN_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tspan/graph.hpp"
#include "tspan/seeds.hpp"
#include "tspan/spanner.hpp"

namespace tspan {

struct EngineOptions {
  std::int64_t seed_budget = kDefaultSeedBudget;
  std::int64_t wall_clock_budget_ms = 0;  // 0 = unlimited
  bool debug_assertions = false;
  bool record_stats = false;  // keep the per-vertex seed count vector
};

struct EngineStats {
  std::int64_t seeds_enumerated = 0;
  std::int64_t keys_created = 0;
  std::int64_t aux_graphs_built = 0;
  std::int64_t spanner_checks = 0;
  std::int64_t max_seeds_per_vertex = 0;
  std::int64_t max_pending_per_key = 0;
  int stage_reached = 0;
  double seed_enum_ms = 0.0;
  std::vector<std::int64_t> seeds_per_vertex;
};

enum class Outcome { admits, does_not_admit, aborted };

struct Decision {
  Outcome outcome = Outcome::does_not_admit;
  std::optional<VertexSubgraph> tree;
  int stages = 0;
  std::string detail;
  EngineStats stats;
};

/// Identifies one partial solution: a center vertex and an index into that
/// vertex's canonical seed list.
struct SolutionKey {
  int center = 0;
  int seed_id = 0;
  bool operator==(const SolutionKey&) const = default;
};

/// One growing solution. `component_vertices` holds the vertex sets of every
/// component of G minus the seed, fixed when the key is created; ids still in
/// `pending_ids` are the uncovered ones. The pending list is the mutable
/// state that persists across stages.
struct PartialSolution {
  SolutionKey key;
  VertexSubgraph tree;
  std::vector<std::vector<int>> component_vertices;
  std::vector<int> pending_ids;

  std::vector<int> covered_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(component_vertices.size()); ++i) {
      if (!std::binary_search(pending_ids.begin(), pending_ids.end(), i)) out.push_back(i);
    }
    return out;
  }
};

/// Per-vertex canonical seed lists plus a flat indexing of (vertex, seed_id)
/// pairs.
struct SeedIndex {
  std::vector<std::vector<SeedTree>> by_vertex;
  std::vector<int> offset;
  int total = 0;

  int flat(int v, int seed_id) const { return offset[static_cast<std::size_t>(v)] + seed_id; }
  const SeedTree& at(const SolutionKey& k) const {
    return by_vertex[static_cast<std::size_t>(k.center)][static_cast<std::size_t>(k.seed_id)];
  }
};

/// Rolling archive of the previous stage's trees, indexed by flat key. The
/// older generation is dropped every time the stage advances. `fresh` marks
/// the keys whose tree changed in the stage the archive came from: a helper
/// that is not fresh was already tried against every still-pending component
/// with this very tree and failed, so retrying it cannot change anything.
struct SolutionStore {
  int stage = 0;
  std::vector<std::shared_ptr<const VertexSubgraph>> archive;
  std::vector<int> max_tree_size_by_vertex;  // over each vertex's own keys
  std::vector<char> fresh;                   // empty means everything is fresh

  const VertexSubgraph& tree_at(int flat_index) const {
    return *archive[static_cast<std::size_t>(flat_index)];
  }
  bool is_fresh(int flat_index) const {
    return fresh.empty() || fresh[static_cast<std::size_t>(flat_index)] != 0;
  }
};

/// Candidate extension of a partial solution with seed S toward component Q,
/// borrowed from a helper solution whose seed is R: restrict the helper's
/// tree to V(Q) u V(R), add S, then drop the vertices of (R \ S) \ Q together
/// with their edges. The result need not be a tree; the caller's checker
/// decides.
inline VertexSubgraph build_auxiliary(const VertexSubgraph& helper_tree,
                                      const VertexSubgraph& helper_seed,
                                      const VertexSubgraph& seed_s,
                                      std::span<const int> q_vertices) {
  std::vector<int> qr(q_vertices.begin(), q_vertices.end());
  qr.insert(qr.end(), helper_seed.vertices().begin(), helper_seed.vertices().end());
  const VertexSubgraph base = induced(helper_tree, std::span<const int>(qr));
  const VertexSubgraph joined = graph_union(base, seed_s);
  std::vector<int> gray;
  for (int r : helper_seed.vertices()) {
    if (!seed_s.contains_vertex(r) &&
        !std::binary_search(q_vertices.begin(), q_vertices.end(), r))
      gray.push_back(r);
  }
  return minus_vertex_set(joined, gray);
}

inline VertexSubgraph build_auxiliary(const VertexSubgraph& helper_tree,
                                      const VertexSubgraph& helper_seed,
                                      const VertexSubgraph& seed_s, const VertexSubgraph& q) {
  return build_auxiliary(helper_tree, helper_seed, seed_s, std::span<const int>(q.vertices()));
}

namespace detail {

/// Vertex sets of the components of g minus `removed` (sorted), ordered by
/// smallest contained vertex.
inline std::vector<std::vector<int>> components_of_complement(const Graph& g,
                                                              const std::vector<int>& removed) {
  std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
  for (int v : removed) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> out;
  std::vector<char> seen = blocked;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline void verify_union_preconditions(const VertexSubgraph& t1, const VertexSubgraph& t2,
                                       const VertexSubgraph& seed_s, const Graph& g) {
  // intersection of the two trees must be exactly the seed
  std::vector<int> iv;
  std::set_intersection(t1.vertices().begin(), t1.vertices().end(), t2.vertices().begin(),
                        t2.vertices().end(), std::back_inserter(iv));
  std::vector<Edge> ie;
  std::set_intersection(t1.edges().begin(), t1.edges().end(), t2.edges().begin(),
                        t2.edges().end(), std::back_inserter(ie));
  if (iv != seed_s.vertices() || ie != seed_s.edges() || seed_s.empty() || !is_tree(seed_s))
    throw std::logic_error("engine: union precondition violated (intersection is not the seed)");
  // no host edge may join the two private parts
  auto only_in = [](const VertexSubgraph& a, const VertexSubgraph& b) {
    std::vector<int> d;
    std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(d));
    return d;
  };
  const std::vector<int> left = only_in(t1, t2), right = only_in(t2, t1);
  for (int u : left) {
    for (int w : g.neighbors(u)) {
      if (std::binary_search(right.begin(), right.end(), w))
        throw std::logic_error("engine: union precondition violated (edge across private parts)");
    }
  }
}

inline void verify_partial_solution(const VertexSubgraph& tree, const Graph& g, int t) {
  if (!is_tree_t_spanner(tree, induced_from_host(g, tree.vertices()), t))
    throw std::logic_error("engine: grown partial solution is not a spanner of its span");
}

}  // namespace detail

/// One stage of growth for one key: walk the pending components in order; for
/// each, scan the previous stage's solutions centered at neighbors of the
/// center within the seed (center ascending, then seed id), and adopt the
/// first auxiliary graph that checks out, covering the component. Helpers
/// that cannot possibly span the component (their tree is missing one of its
/// vertices) are skipped without building the auxiliary graph.
inline PartialSolution find_subtree_stage(const PartialSolution& ps, const SolutionStore& store,
                                          const SeedIndex& seeds, const Graph& g, int t,
                                          const EngineOptions& opts, EngineStats& stats) {
  PartialSolution out = ps;
  if (out.pending_ids.empty()) return out;
  const VertexSubgraph& seed_s = seeds.at(ps.key).tree;
  std::vector<int> helper_centers;
  for (const auto& [a, b] : seed_s.edges()) {
    if (a == ps.key.center) helper_centers.push_back(b);
    if (b == ps.key.center) helper_centers.push_back(a);
  }
  std::sort(helper_centers.begin(), helper_centers.end());
  if (helper_centers.empty()) return out;

  std::vector<int> still_pending;
  for (int qid : out.pending_ids) {
    const std::vector<int>& q = out.component_vertices[static_cast<std::size_t>(qid)];
    bool covered = false;
    std::optional<VertexSubgraph> target;  // G[Q u S], materialized on first plausible helper
    for (int u : helper_centers) {
      if (static_cast<int>(q.size()) > store.max_tree_size_by_vertex[static_cast<std::size_t>(u)])
        continue;
      const auto& u_seeds = seeds.by_vertex[static_cast<std::size_t>(u)];
      for (int rid = 0; rid < static_cast<int>(u_seeds.size()); ++rid) {
        if (!store.is_fresh(seeds.flat(u, rid))) continue;
        const VertexSubgraph& helper_tree = store.tree_at(seeds.flat(u, rid));
        if (static_cast<int>(q.size()) > helper_tree.num_vertices()) continue;
        if (!contains_all_sorted(helper_tree.vertices(), q)) continue;
        const VertexSubgraph& helper_seed = u_seeds[static_cast<std::size_t>(rid)].tree;
        VertexSubgraph aux = build_auxiliary(helper_tree, helper_seed, seed_s, q);
        ++stats.aux_graphs_built;
        if (!target) {
          std::vector<int> tv = q;
          tv.insert(tv.end(), seed_s.vertices().begin(), seed_s.vertices().end());
          target = induced_from_host(g, tv);
        }
        ++stats.spanner_checks;
        if (!check_tree_t_spanner(aux, *target, t).ok) continue;
        if (opts.debug_assertions) detail::verify_union_preconditions(out.tree, aux, seed_s, g);
        out.tree = graph_union(out.tree, aux);
        if (opts.debug_assertions) detail::verify_partial_solution(out.tree, g, t);
        covered = true;
        break;
      }
      if (covered) break;
    }
    if (!covered) still_pending.push_back(qid);
  }
  out.pending_ids = std::move(still_pending);
  return out;
}

/// The stage loop. Stage 1 enumerates seeds and initializes one partial
/// solution per (vertex, seed) key; later stages grow every key from the
/// previous generation only. Returns the first solution that spans the whole
/// graph. A stage in which nothing grew repeats verbatim forever, so the
/// negative answer is concluded there instead of idling through the
/// remaining stages.
class DpEngine {
 public:
  DpEngine(const Graph& g, int t, EngineOptions opts = {})
      : g_(g), t_(t), opts_(opts) {
    if (t < 1) throw std::invalid_argument("DpEngine: t must be >= 1");
  }

  /// Restrict acceptance to solutions grown from exactly this seed tree.
  void set_forced_seed(const VertexSubgraph& forced) { forced_seed_ = forced; }

  Decision run() {
    if (auto d = start()) return *d;
    while (stage_ < g_.n()) {
      if (auto d = step()) return *d;
      if (!last_stage_grew_) break;  // fixed point: later stages cannot differ
    }
    return conclude_does_not_admit();
  }

  /// Dispatch plus stage 1. Returns a decision when one is already forced.
  std::optional<Decision> start() {
    start_time_ = Clock::now();
    if (g_.n() == 0) {
      Decision d;
      d.outcome = Outcome::admits;
      d.tree = whole_subgraph(g_);
      d.detail = "empty graph";
      return d;
    }
    if (t_ == 1) {
      const VertexSubgraph whole = whole_subgraph(g_);
      Decision d;
      if (is_tree(whole)) {
        d.outcome = Outcome::admits;
        d.tree = whole;
      } else {
        d.outcome = Outcome::does_not_admit;
        d.detail = "t = 1 admits exactly trees";
      }
      return d;
    }
    if (!is_connected(g_)) {
      Decision d;
      d.outcome = Outcome::does_not_admit;
      std::vector<char> seen(static_cast<std::size_t>(g_.n()), 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g_.neighbors(u))
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
          }
      }
      int other = -1;
      for (int v = 0; v < g_.n() && other == -1; ++v)
        if (!seen[static_cast<std::size_t>(v)]) other = v;
      d.detail = "disconnected input: vertices 0 and " + std::to_string(other) +
                 " are in different components";
      return d;
    }

    seeds_.by_vertex.assign(static_cast<std::size_t>(g_.n()), {});
    seeds_.offset.assign(static_cast<std::size_t>(g_.n()), 0);
    if (opts_.record_stats) stats_.seeds_per_vertex.assign(static_cast<std::size_t>(g_.n()), 0);
    for (int v = 0; v < g_.n(); ++v) {
      if (auto d = check_wall_clock()) return d;
      std::vector<SeedTree> sv;
      const auto enum_begin = Clock::now();
      try {
        sv = enumerate_seeds(g_, v, t_, opts_.seed_budget);
      } catch (const SeedBudgetExceeded& e) {
        return aborted(e.what());
      }
      stats_.seed_enum_ms +=
          std::chrono::duration<double, std::milli>(Clock::now() - enum_begin).count();
      seeds_.offset[static_cast<std::size_t>(v)] = seeds_.total;
      seeds_.total += static_cast<int>(sv.size());
      stats_.seeds_enumerated += static_cast<std::int64_t>(sv.size());
      stats_.max_seeds_per_vertex =
          std::max(stats_.max_seeds_per_vertex, static_cast<std::int64_t>(sv.size()));
      if (opts_.record_stats)
        stats_.seeds_per_vertex[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(sv.size());
      seeds_.by_vertex[static_cast<std::size_t>(v)] = std::move(sv);

      const auto& list = seeds_.by_vertex[static_cast<std::size_t>(v)];
      for (int sid = 0; sid < static_cast<int>(list.size()); ++sid) {
        const SeedTree& seed = list[static_cast<std::size_t>(sid)];
        PartialSolution ps;
        ps.key = SolutionKey{v, sid};
        ps.tree = seed.tree;
        ps.component_vertices = detail::components_of_complement(g_, seed.tree.vertices());
        ps.pending_ids.resize(ps.component_vertices.size());
        for (std::size_t i = 0; i < ps.pending_ids.size(); ++i)
          ps.pending_ids[i] = static_cast<int>(i);
        stats_.max_pending_per_key = std::max(
            stats_.max_pending_per_key, static_cast<std::int64_t>(ps.component_vertices.size()));
        ++stats_.keys_created;
        store_.archive.push_back(std::make_shared<const VertexSubgraph>(ps.tree));
        solutions_.push_back(std::move(ps));
        if (auto d = try_accept(solutions_.back(), 1)) return d;
      }
    }
    stage_ = 1;
    stats_.stage_reached = 1;
    store_.stage = 1;
    refresh_max_tree_sizes();
    if (forced_seed_ && !forced_key_exists())
      throw std::logic_error("DpEngine: forced seed missing from enumeration");
    return std::nullopt;
  }

  /// Run stage `stage()+1`. Requires start() to have returned no decision.
  std::optional<Decision> step() {
    const int k = stage_ + 1;
    last_stage_grew_ = false;
    grew_.assign(solutions_.size(), 0);
    for (int v = 0; v < g_.n(); ++v) {
      if (auto d = check_wall_clock()) return d;
      const auto& list = seeds_.by_vertex[static_cast<std::size_t>(v)];
      for (int sid = 0; sid < static_cast<int>(list.size()); ++sid) {
        const std::size_t i = static_cast<std::size_t>(seeds_.flat(v, sid));
        // keys that are complete, or whose seed has no edges (and hence no
        // helper neighbors), can never change; growing them would be a no-op
        if (solutions_[i].pending_ids.empty()) continue;
        if (list[static_cast<std::size_t>(sid)].tree.num_edges() == 0) continue;
        PartialSolution grown =
            find_subtree_stage(solutions_[i], store_, seeds_, g_, t_, opts_, stats_);
        if (grown.pending_ids.size() < solutions_[i].pending_ids.size()) {
          grew_[i] = 1;
          last_stage_grew_ = true;
        }
        solutions_[i] = std::move(grown);
        if (auto d = try_accept(solutions_[i], k)) return d;
      }
    }
    for (std::size_t i = 0; i < solutions_.size(); ++i) {
      if (grew_[i])
        store_.archive[i] = std::make_shared<const VertexSubgraph>(solutions_[i].tree);
    }
    store_.fresh = grew_;
    stage_ = k;
    stats_.stage_reached = k;
    store_.stage = k;
    refresh_max_tree_sizes();
    return std::nullopt;
  }

  Decision conclude_does_not_admit() {
    Decision d;
    d.outcome = Outcome::does_not_admit;
    d.stages = stage_;
    d.stats = stats_;
    return d;
  }

  int stage() const { return stage_; }
  bool last_stage_grew() const { return last_stage_grew_; }
  const SeedIndex& seed_index() const { return seeds_; }
  const SolutionStore& store() const { return store_; }
  const EngineStats& stats() const { return stats_; }
  const PartialSolution& solution(int v, int seed_id) const {
    return solutions_[static_cast<std::size_t>(seeds_.flat(v, seed_id))];
  }

  /// Materializes the still-pending components of a key as induced subgraphs.
  std::vector<VertexSubgraph> pending_subgraphs(const PartialSolution& ps) const {
    std::vector<VertexSubgraph> out;
    for (int id : ps.pending_ids)
      out.push_back(induced_from_host(g_, ps.component_vertices[static_cast<std::size_t>(id)]));
    return out;
  }

 private:
  using Clock = std::chrono::steady_clock;

  std::optional<Decision> try_accept(const PartialSolution& ps, int k) {
    if (ps.tree.num_vertices() != g_.n()) return std::nullopt;
    if (forced_seed_ && seeds_.at(ps.key).tree != *forced_seed_) return std::nullopt;
    // soundness gate: never hand out an unvalidated tree
    if (!is_tree_t_spanner(ps.tree, whole_subgraph(g_), t_))
      throw std::logic_error("DpEngine: covering solution failed final validation");
    Decision d;
    d.outcome = Outcome::admits;
    d.tree = ps.tree;
    d.stages = k;
    stats_.stage_reached = k;
    d.stats = stats_;
    return d;
  }

  Decision aborted(const std::string& why) {
    Decision d;
    d.outcome = Outcome::aborted;
    d.stages = stage_;
    d.detail = why;
    d.stats = stats_;
    return d;
  }

  std::optional<Decision> check_wall_clock() {
    if (opts_.wall_clock_budget_ms <= 0) return std::nullopt;
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_time_).count();
    if (elapsed <= opts_.wall_clock_budget_ms) return std::nullopt;
    return aborted("wall clock budget of " + std::to_string(opts_.wall_clock_budget_ms) +
                   " ms exceeded");
  }

  void refresh_max_tree_sizes() {
    store_.max_tree_size_by_vertex.assign(static_cast<std::size_t>(g_.n()), 0);
    for (int v = 0; v < g_.n(); ++v) {
      const auto& list = seeds_.by_vertex[static_cast<std::size_t>(v)];
      int best = 0;
      for (int sid = 0; sid < static_cast<int>(list.size()); ++sid)
        best = std::max(best, store_.tree_at(seeds_.flat(v, sid)).num_vertices());
      store_.max_tree_size_by_vertex[static_cast<std::size_t>(v)] = best;
    }
  }

  bool forced_key_exists() const {
    for (const auto& per_vertex : seeds_.by_vertex)
      for (const auto& s : per_vertex)
        if (s.tree == *forced_seed_) return true;
    return false;
  }

  const Graph& g_;
  int t_;
  EngineOptions opts_;
  std::optional<VertexSubgraph> forced_seed_;
  SeedIndex seeds_;
  SolutionStore store_;
  std::vector<PartialSolution> solutions_;
  std::vector<char> grew_;
  int stage_ = 0;
  bool last_stage_grew_ = true;
  EngineStats stats_;
  Clock::time_point start_time_;
};

/// Top-level decision: empty graphs admit, t = 1 admits exactly trees,
/// disconnected graphs never admit, everything else goes through the stage
/// loop.
inline Decision decide_tree_t_spanner(const Graph& g, int t, const EngineOptions& opts = {}) {
  return DpEngine(g, t, opts).run();
}

/// Variant that only accepts a spanning solution grown from exactly the given
/// seed; all other seeds still participate as helpers. `forced` must be a
/// subtree of g with diameter at most 2*floor(t/2).
inline Decision decide_with_forced_subtree(const Graph& g, int t, const VertexSubgraph& forced,
                                           const EngineOptions& opts = {}) {
  if (t < 1) throw std::invalid_argument("decide_with_forced_subtree: t must be >= 1");
  if (forced.host_id() != g.host_id())
    throw std::invalid_argument("decide_with_forced_subtree: forced tree has a different host");
  if (!is_tree(forced)) throw std::invalid_argument("decide_with_forced_subtree: forced is not a tree");
  for (int v : forced.vertices()) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("decide_with_forced_subtree: forced vertex not in graph");
  }
  for (const auto& e : forced.edges()) {
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("decide_with_forced_subtree: forced edge not in graph");
  }
  int diameter = 0;
  for (int v : forced.vertices()) {
    const DistanceRow row = bfs_distances(forced, v);
    for (int u : forced.vertices()) diameter = std::max(diameter, row.at(u));
  }
  if (diameter > 2 * (t / 2))
    throw std::invalid_argument("decide_with_forced_subtree: forced tree diameter exceeds 2*floor(t/2)");
  // An edgeless forced tree constrains nothing: every spanning tree contains
  // every vertex, so the plain decision applies. (As a seed it could never
  // grow: it has no neighbors to borrow helpers from.)
  if (forced.num_edges() == 0) return DpEngine(g, t, opts).run();
  DpEngine engine(g, t, opts);
  engine.set_forced_seed(forced);
  return engine.run();
}

}  // namespace tspan

#endif  // TSPAN_ENGINE_HPP
