#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apack/errors.hpp"

namespace apack {

/// A set of vertex ids, kept sorted ascending with no duplicates. Every set
/// the library returns obeys this ordering so outputs are deterministic.
using VertexSet = std::vector<int>;

/// Simple undirected graph on dense vertex ids 0..n-1, backed by sorted
/// adjacency lists. No self-loops, no parallel edges, adjacency symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;

  /// Inserts an undirected edge, keeping both lists sorted.
  /// Throws input_error on self-loops, duplicates, or ids out of range.
  void add_edge(int u, int v);

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
};

// ---- vertex-set helpers ----

/// Sorts, deduplicates, and range-checks a set of ids against g.
VertexSet canonical_set(const Graph& g, VertexSet ids);

bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// N(X): vertices outside X with a neighbor in X.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// N[X] = N(X) together with X itself.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

// ---- structural operations ----

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside X
  std::vector<int> new_to_old;
};

/// Subgraph induced by X; new ids follow the ascending order of X.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// Bookkeeping for a round of set contractions. blob_of is total: vertices
/// untouched by the contraction appear as singleton blobs. origin_of and
/// blob_of are mutually inverse.
struct ContractionMap {
  std::vector<VertexSet> blob_of;  // contracted id -> original ids
  std::vector<int> origin_of;      // original id -> contracted id
};

struct ContractedGraph {
  Graph graph;
  ContractionMap map;
};

/// Contracts each blob (pairwise disjoint, each inducing a connected
/// subgraph) into a single vertex. Parallel edges are merged and self-loops
/// dropped, so the result is again simple. Vertex numbering: untouched
/// vertices first in ascending original id, then one vertex per blob in
/// input order.
ContractedGraph contract_sets(const Graph& g, const std::vector<VertexSet>& blobs);

/// Square of g: u ~ v iff their distance in g is 1 or 2.
Graph square_graph(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> elimination_order;  // repeated min-degree, lowest id first
};
DegeneracyResult degeneracy(const Graph& g);

struct AnticompleteCheck {
  bool anticomplete = false;
  bool sets_overlap = false;
};

/// True iff no edge joins X and Y and the sets are disjoint. Overlapping
/// sets report anticomplete = false with sets_overlap raised.
AnticompleteCheck anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace apack
