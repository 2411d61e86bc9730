#pragma once

#include <cstdint>
#include <optional>

#include "apack/flow.hpp"
#include "apack/graph.hpp"

namespace apack {

/// A pendant two-vertex path endpoint-mid attached to a terminal. The
/// terminal's A- or B-membership moves to `endpoint`, which has degree 1;
/// `mid` has degree 2.
struct GadgetRecord {
  enum class Side { A, B };
  int original_terminal = -1;
  int mid = -1;
  int endpoint = -1;
  Side side = Side::A;
};

struct GadgetedInstance {
  Graph graph;
  VertexSet a;
  VertexSet b;
  std::vector<GadgetRecord> records;
};

/// Rewrites terminals so that afterwards every terminal has degree at most 1
/// and every neighbor of a terminal degree at most 2. Vertices in A ∩ B
/// always receive two independent gadgets, one per side; other terminals are
/// gadgeted only while they violate the degree conditions (run to fixpoint).
/// New vertices are appended after the existing ids.
GadgetedInstance attach_terminal_gadgets(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Removes the gadget vertices from both ends of every path, mapping
/// (A',B')-paths of the gadgeted graph back to (A,B)-paths of the original.
/// Throws invariant_error when a path does not match its gadget records.
PathSystem strip_gadgets(const PathSystem& paths, const std::vector<GadgetRecord>& records);

/// Partitions Y into classes with pairwise distance at least 3 (disjoint
/// closed neighborhoods) by greedy coloring of the square graph in ascending
/// id order. At most maxdeg(g)^2 + 1 classes.
std::vector<VertexSet> partition_distance3(const Graph& g, const VertexSet& y);

struct RoundStats {
  int flow_before = 0;
  int flow_after = 0;
  int max_degree = 0;        // of the graph the round ran on
  int independent_size = 0;  // |I|
};

struct SparsifyRoundResult {
  VertexSet kept;
  RoundStats stats;
};

/// One degree-reduction round: contract N[v] for every v in I, route a
/// maximum disjoint path system in the contracted graph, expand it so each
/// blob is crossed by at most three vertices, then delete v when unused and
/// N(v) minus the path's entry/exit when used. Requires I distance-3
/// independent and disjoint from N[A ∪ B]. Afterwards every surviving v in I
/// has degree at most 2 and the flow drops by a factor of at most
/// maxdeg + 1 (rounded up).
SparsifyRoundResult sparsify_round(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& i);

/// Rewrites a path of the contracted graph into a path of g, traversing each
/// multi-vertex blob through a shortest inner route (lowest ids first). Path
/// endpoints must be uncontracted vertices.
std::vector<int> expand_contracted_path(const std::vector<int>& path, const ContractionMap& map,
                                        const Graph& g);

struct SparsifyReport {
  int delta_used = 0;            // max degree of the graph handed to sparsify_full
  std::int64_t guarantee = 0;    // ceil(flow / (delta+1)^(delta^2+1))
  std::vector<RoundStats> rounds;
  int initial_flow() const { return rounds.empty() ? 0 : rounds.front().flow_before; }
  int final_flow() const { return rounds.empty() ? 0 : rounds.back().flow_after; }
};

struct SparsifyResult {
  VertexSet kept;  // original ids
  SparsifyReport report;
};

/// Runs delta^2 + 1 rounds of sparsify_round over a greedy distance-3
/// partition of V \ N[A ∪ B]; classes beyond the partition run as no-ops so
/// the report always carries delta^2 + 1 rounds. Afterwards every kept
/// vertex outside N[A ∪ B] has degree at most 2 in the induced subgraph.
SparsifyResult sparsify_full(const Graph& g, const VertexSet& a, const VertexSet& b);

struct BoundedDegreeSolution {
  PathSystem paths;  // vertex-disjoint and pairwise anticomplete in the input graph
  SparsifyReport report;
  std::optional<SeparatorCertificate> separator;  // present when no (A,B)-path exists
};

/// Full bounded-degree pipeline: terminal gadgets, sparsification to a
/// degree-2 remnant (where disjoint paths are automatically pairwise
/// anticomplete), a maximum disjoint path system there, and gadget removal.
/// Returns at least ceil(flow / (d+1)^(d^2+1)) paths, d the post-gadget max
/// degree.
BoundedDegreeSolution solve_bounded_degree(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace apack
