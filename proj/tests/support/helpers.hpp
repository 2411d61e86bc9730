#pragma once

// Shared test utilities: tiny graph builders, seeded random instances, and
// the independent brute-force oracles the library is checked against. The
// oracles here deliberately avoid the library's flow/search code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "apack/generators.hpp"
#include "apack/graph.hpp"

namespace testsupport {

inline apack::Graph path_graph(int n) {
  apack::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline apack::Graph cycle_graph(int n) {
  apack::Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline apack::Graph complete_graph(int n) {
  apack::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

struct TestInstance {
  apack::Graph graph;
  apack::VertexSet a;
  apack::VertexSet b;
};

// Seeded random instance with disjoint terminal sets.
inline TestInstance random_instance(std::uint32_t seed, int n, double density,
                                    int terminals_per_side) {
  TestInstance inst;
  inst.graph = apack::random_density_graph(n, density, seed);
  std::mt19937 rng(seed ^ 0x5bd1e995u);
  std::vector<int> picks = apack::sample_distinct(n, 2 * terminals_per_side, rng);
  inst.a.assign(picks.begin(), picks.begin() + terminals_per_side);
  inst.b.assign(picks.begin() + terminals_per_side, picks.end());
  std::sort(inst.a.begin(), inst.a.end());
  std::sort(inst.b.begin(), inst.b.end());
  return inst;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// ---- independent separator oracle (plain BFS, no library flow code) ----

inline bool blocked_set_separates(const apack::Graph& g, const apack::VertexSet& a,
                                  const apack::VertexSet& b, std::uint32_t blocked) {
  const int n = g.vertex_count();
  std::vector<char> in_b(static_cast<size_t>(n), 0);
  for (int v : b) in_b[static_cast<size_t>(v)] = 1;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> q;
  for (int v : a) {
    if (blocked >> v & 1u) continue;
    if (in_b[static_cast<size_t>(v)]) return false;
    if (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      q.push(v);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (blocked >> w & 1u) continue;
      if (in_b[static_cast<size_t>(w)]) return false;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  return true;
}

// Exhaustive minimum (A,B)-separator size; n must stay below ~20.
inline int brute_min_separator(const apack::Graph& g, const apack::VertexSet& a,
                               const apack::VertexSet& b) {
  const int n = g.vertex_count();
  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    if (blocked_set_separates(g, a, b, mask)) best = size;
  }
  return best;
}

// ---- exhaustive maximum independent set (for greedy checks) ----

inline int brute_max_independent_set(const apack::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> nbr(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= 1u << w;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((mask >> v & 1u) && (mask & nbr[static_cast<size_t>(v)])) independent = false;
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// ---- second, independent packing oracle: enumerate every (A,B)-path up
// front, then search over index-increasing path tuples ----

inline std::vector<std::vector<int>> enumerate_ab_paths(const apack::Graph& g,
                                                        const apack::VertexSet& a,
                                                        const apack::VertexSet& b) {
  const int n = g.vertex_count();
  std::vector<char> in_b(static_cast<size_t>(n), 0);
  for (int v : b) in_b[static_cast<size_t>(v)] = 1;
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  std::vector<char> used(static_cast<size_t>(n), 0);
  auto dfs = [&](auto&& self, int v) -> void {
    stack.push_back(v);
    used[static_cast<size_t>(v)] = 1;
    if (in_b[static_cast<size_t>(v)]) out.push_back(stack);
    for (int w : g.neighbors(v))
      if (!used[static_cast<size_t>(w)]) self(self, w);
    used[static_cast<size_t>(v)] = 0;
    stack.pop_back();
  };
  for (int v : a) dfs(dfs, v);
  return out;
}

inline int naive_max_anticomplete_packing(const apack::Graph& g, const apack::VertexSet& a,
                                          const apack::VertexSet& b) {
  auto paths = enumerate_ab_paths(g, a, b);
  const int n = g.vertex_count();
  std::vector<std::uint64_t> vertices(paths.size(), 0), hull(paths.size(), 0);
  for (size_t i = 0; i < paths.size(); ++i)
    for (int v : paths[i]) {
      vertices[i] |= std::uint64_t{1} << v;
      hull[i] |= std::uint64_t{1} << v;
      for (int w : g.neighbors(v)) hull[i] |= std::uint64_t{1} << w;
    }
  (void)n;
  auto rec = [&](auto&& self, size_t start, std::uint64_t forbidden) -> int {
    int best = 0;
    for (size_t i = start; i < paths.size(); ++i)
      if ((vertices[i] & forbidden) == 0)
        best = std::max(best, 1 + self(self, i + 1, forbidden | hull[i]));
    return best;
  };
  return rec(rec, 0, 0);
}

}  // namespace testsupport
