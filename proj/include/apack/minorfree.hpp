#pragma once

#include "apack/flow.hpp"
#include "apack/graph.hpp"

namespace apack {

/// One vertex per path of a disjoint path system; two vertices are adjacent
/// iff at least one edge of the host graph joins the corresponding paths.
/// Edgeless exactly when the system is already pairwise anticomplete.
struct ConflictGraph {
  Graph base;
  std::vector<std::vector<int>> path_of;  // vertex index -> underlying path
};

ConflictGraph build_conflict_graph(const Graph& g, const PathSystem& paths);

/// Min-degree greedy independent set with lowest-id tie-break. Guarantees
/// size at least n / (avg_degree + 1).
VertexSet greedy_independent_set(const Graph& g);

struct MinorFreeReport {
  int t = 0;                 // maximum number of disjoint (A,B)-paths
  double avg_degree = 0.0;   // of the conflict graph
  int is_size = 0;           // selected independent set size
  int certified_bound = 0;   // ceil(t / (avg_degree + 1)), exact arithmetic
};

struct MinorFreeSolution {
  PathSystem paths;  // vertex-disjoint and pairwise anticomplete
  MinorFreeReport report;
};

/// Packs a maximum disjoint path system, builds the conflict graph, and
/// keeps an independent set of paths. Correct on any graph; the certified
/// bound is strong exactly when the conflict graph is sparse (e.g. inherited
/// from a minor-free host).
MinorFreeSolution solve_minor_free(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace apack
