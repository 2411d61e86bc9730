#pragma once

#include <cstdint>

#include "apack/graph.hpp"

namespace apack {

/// Resource limits for the exact packing search. The search either finishes
/// within budget or throws budget_error; it never returns an approximate
/// answer.
struct OracleBudget {
  int max_vertices = 16;
  std::int64_t max_paths_enumerated = 1'000'000;
};

/// Exact maximum number of pairwise anticomplete, vertex-disjoint
/// (A,B)-paths. Recursive search: enumerate (A,B)-paths in lowest-id DFS
/// order and recurse on the graph minus N[P], memoized on the bitmask of
/// surviving vertices, pruning branches whose remainder has no (A,B)-path.
int max_anticomplete_packing(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const OracleBudget& budget = {});

/// True iff a packing of size k exists; short-circuits as soon as one is
/// found.
bool exists_k_packing(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                      const OracleBudget& budget = {});

}  // namespace apack
