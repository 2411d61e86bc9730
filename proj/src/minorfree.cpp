#include "apack/minorfree.hpp"

#include <algorithm>

namespace apack {

ConflictGraph build_conflict_graph(const Graph& g, const PathSystem& system) {
  const auto& paths = system.paths;
  std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < paths.size(); ++i)
    for (int v : paths[i]) {
      if (v < 0 || v >= g.vertex_count()) throw input_error("conflict graph: path vertex out of range");
      if (owner[static_cast<size_t>(v)] != -1)
        throw input_error("conflict graph requires vertex-disjoint paths");
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  ConflictGraph out;
  out.base = Graph(static_cast<int>(paths.size()));
  out.path_of = paths;
  std::vector<std::pair<int, int>> conflicts;
  for (const auto& [u, v] : g.edges()) {
    int pu = owner[static_cast<size_t>(u)];
    int pv = owner[static_cast<size_t>(v)];
    if (pu != -1 && pv != -1 && pu != pv)
      conflicts.emplace_back(std::min(pu, pv), std::max(pu, pv));
  }
  std::sort(conflicts.begin(), conflicts.end());
  conflicts.erase(std::unique(conflicts.begin(), conflicts.end()), conflicts.end());
  for (const auto& [u, v] : conflicts) out.base.add_edge(u, v);
  return out;
}

VertexSet greedy_independent_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<char> gone(static_cast<size_t>(n), 0);
  VertexSet picked;
  int remaining = n;
  while (remaining > 0) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<size_t>(v)] && (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
        best = v;
    picked.push_back(best);
    // remove N[best]
    gone[static_cast<size_t>(best)] = 1;
    --remaining;
    for (int w : g.neighbors(best))
      if (!gone[static_cast<size_t>(w)]) {
        gone[static_cast<size_t>(w)] = 1;
        --remaining;
        for (int x : g.neighbors(w))
          if (!gone[static_cast<size_t>(x)]) --deg[static_cast<size_t>(x)];
      }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

MinorFreeSolution solve_minor_free(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);

  MinorFreeSolution out;
  PathSystem routed = max_disjoint_paths(g, a, b);
  const int t = static_cast<int>(routed.paths.size());
  out.report.t = t;
  if (t == 0) {
    out.paths.vertex_disjoint = true;
    out.paths.pairwise_anticomplete = true;
    return out;
  }

  ConflictGraph conflict = build_conflict_graph(g, routed);
  const long long m = conflict.base.edge_count();
  out.report.avg_degree = 2.0 * static_cast<double>(m) / static_cast<double>(t);

  VertexSet chosen = greedy_independent_set(conflict.base);
  out.report.is_size = static_cast<int>(chosen.size());
  // ceil(t / (avg+1)) = ceil(t^2 / (2m + t)) in exact integer arithmetic
  const long long tt = static_cast<long long>(t);
  out.report.certified_bound = static_cast<int>((tt * tt + 2 * m + tt - 1) / (2 * m + tt));
  if (out.report.is_size < out.report.certified_bound)
    throw invariant_error("greedy independent set fell below the average-degree bound");

  for (int idx : chosen) out.paths.paths.push_back(conflict.path_of[static_cast<size_t>(idx)]);
  PathSystemCheck check = check_path_system(g, a, b, out.paths.paths);
  if (!check.vertex_disjoint || !check.pairwise_anticomplete || !check.paths_valid || !check.endpoints_ok)
    throw invariant_error("solve_minor_free: selected paths failed validation");
  out.paths.vertex_disjoint = true;
  out.paths.pairwise_anticomplete = true;
  return out;
}

}  // namespace apack
