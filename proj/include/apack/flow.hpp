#pragma once

#include "apack/graph.hpp"

namespace apack {

/// An ordered collection of (A,B)-paths, each a sequence of distinct,
/// consecutively adjacent vertices whose first vertex lies in A and last in
/// B. A vertex in A ∩ B counts as a one-vertex path. The flags record
/// explicitly checked properties of the collection as a whole.
struct PathSystem {
  std::vector<std::vector<int>> paths;
  bool vertex_disjoint = false;
  bool pairwise_anticomplete = false;
};

/// A vertex set claimed to meet every (A,B)-path. May include terminals.
struct SeparatorCertificate {
  VertexSet vertices;
};

/// Maximum number of fully vertex-disjoint (A,B)-paths.
int flow_value(const Graph& g, const VertexSet& a, const VertexSet& b);

/// A maximum collection of vertex-disjoint (A,B)-paths. Deterministic:
/// unit-vertex-capacity max flow with shortest augmenting phases, arcs tried
/// in ascending id order, decomposition lowest-id-first.
PathSystem max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b);

/// A minimum (A,B)-separator: the vertices whose in-copy is residual
/// reachable from the source while the out-copy is not.
SeparatorCertificate min_separator(const Graph& g, const VertexSet& a, const VertexSet& b);

/// True iff every (A,B)-path intersects s, i.e. no b in B \ s is reachable
/// from A \ s once s is removed.
bool is_separator(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s);

/// Validation outcome for a claimed path system, checked against g, A, B.
struct PathSystemCheck {
  bool paths_valid = false;
  bool endpoints_ok = false;
  bool vertex_disjoint = false;
  bool pairwise_anticomplete = false;
  bool ok() const {
    return paths_valid && endpoints_ok && vertex_disjoint && pairwise_anticomplete;
  }
};
PathSystemCheck check_path_system(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  const std::vector<std::vector<int>>& paths);

/// True iff no edge of g joins two distinct paths. Paths must be disjoint.
bool paths_pairwise_anticomplete(const Graph& g, const std::vector<std::vector<int>>& paths);

}  // namespace apack
