#include "apack/oracle.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace apack {

namespace {

using Mask = std::uint64_t;

struct PackingSearch {
  const Graph& g;
  Mask a_mask = 0;
  Mask b_mask = 0;
  std::vector<Mask> closed;  // N[v] as a bitmask
  std::int64_t paths_seen = 0;
  std::int64_t path_budget = 0;
  std::unordered_map<Mask, int> memo;

  PackingSearch(const Graph& graph, const VertexSet& a, const VertexSet& b,
                const OracleBudget& budget)
      : g(graph), path_budget(budget.max_paths_enumerated) {
    if (budget.max_vertices <= 0 || budget.max_paths_enumerated <= 0)
      throw input_error("oracle budget fields must be positive");
    if (g.vertex_count() > budget.max_vertices)
      throw budget_error("instance has " + std::to_string(g.vertex_count()) +
                         " vertices, oracle budget allows " + std::to_string(budget.max_vertices));
    if (g.vertex_count() > 63)
      throw budget_error("oracle is limited to 63 vertices");
    for (int v : a) a_mask |= Mask{1} << v;
    for (int v : b) b_mask |= Mask{1} << v;
    closed.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      Mask m = Mask{1} << v;
      for (int w : g.neighbors(v)) m |= Mask{1} << w;
      closed[static_cast<size_t>(v)] = m;
    }
  }

  void count_path() {
    if (++paths_seen > path_budget)
      throw budget_error("oracle path enumeration budget exceeded");
  }

  // any (A,B)-path inside mask? (flow-zero prune)
  bool reachable(Mask mask) const {
    Mask start = a_mask & mask;
    if (start == 0 || (b_mask & mask) == 0) return false;
    Mask reach = start;
    while (true) {
      Mask frontier = reach;
      Mask grown = reach;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grown |= closed[static_cast<size_t>(v)] & mask;
      }
      if (grown == reach) break;
      reach = grown;
    }
    return (reach & b_mask) != 0;
  }

  // Max packing inside G[mask], terminals restricted to mask.
  int solve(Mask mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    int best = 0;
    if (reachable(mask)) {
      Mask starts = a_mask & mask;
      while (starts) {
        int v = std::countr_zero(starts);
        starts &= starts - 1;
        extend(mask, v, Mask{1} << v, closed[static_cast<size_t>(v)], best);
      }
    }
    memo.emplace(mask, best);
    return best;
  }

  // Grow a path ending at v; `used` holds its vertices, `hull` the union of
  // their closed neighborhoods. Every time the endpoint lies in B the path
  // counts as complete and the search recurses on the remainder.
  void extend(Mask mask, int v, Mask used, Mask hull, int& best) {
    if (b_mask & (Mask{1} << v)) {
      count_path();
      int cand = 1 + solve(mask & ~hull);
      if (cand > best) best = cand;
    }
    for (int w : g.neighbors(v)) {
      Mask bit = Mask{1} << w;
      if ((mask & bit) == 0 || (used & bit) != 0) continue;
      extend(mask, w, used | bit, hull | closed[static_cast<size_t>(w)], best);
    }
  }

  // Decision variant with short-circuiting: is there a packing of size
  // `need` inside G[mask]?
  std::unordered_map<Mask, bool> decision_memo;
  int decision_need = 0;

  bool exists(Mask mask, int need) {
    if (need <= 0) return true;
    if (!reachable(mask)) return false;
    Mask key = mask * 64 + static_cast<Mask>(need);
    if (auto it = decision_memo.find(key); it != decision_memo.end()) return it->second;
    bool found = false;
    Mask starts = a_mask & mask;
    while (starts && !found) {
      int v = std::countr_zero(starts);
      starts &= starts - 1;
      found = extend_exists(mask, v, Mask{1} << v, closed[static_cast<size_t>(v)], need);
    }
    decision_memo.emplace(key, found);
    return found;
  }

  bool extend_exists(Mask mask, int v, Mask used, Mask hull, int need) {
    if (b_mask & (Mask{1} << v)) {
      count_path();
      if (exists(mask & ~hull, need - 1)) return true;
    }
    for (int w : g.neighbors(v)) {
      Mask bit = Mask{1} << w;
      if ((mask & bit) == 0 || (used & bit) != 0) continue;
      if (extend_exists(mask, w, used | bit, hull | closed[static_cast<size_t>(w)], need))
        return true;
    }
    return false;
  }
};

}  // namespace

int max_anticomplete_packing(const Graph& g, const VertexSet& a_in, const VertexSet& b_in,
                             const OracleBudget& budget) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  PackingSearch search(g, a, b, budget);
  Mask full = g.vertex_count() == 0 ? 0 : (~Mask{0} >> (64 - g.vertex_count()));
  return search.solve(full);
}

bool exists_k_packing(const Graph& g, const VertexSet& a_in, const VertexSet& b_in, int k,
                      const OracleBudget& budget) {
  if (k <= 0) return true;
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  PackingSearch search(g, a, b, budget);
  Mask full = g.vertex_count() == 0 ? 0 : (~Mask{0} >> (64 - g.vertex_count()));
  return search.exists(full, k);
}

}  // namespace apack
