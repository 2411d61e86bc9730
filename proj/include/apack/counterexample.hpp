#pragma once

#include <optional>
#include <string>

#include "apack/graph.hpp"

namespace apack {

/// The hard family: k row paths of length p*k, where row i additionally
/// carries a star centered at its column p*i reaching every other row. The
/// rows witness flow k, yet the closed neighborhood of any single (A,B)-path
/// already separates A from B, so no two disjoint anticomplete paths exist.
/// Degeneracy stays 2 and the girth is 2p + 2 with p = max(2, g/2).
struct CounterexampleInstance {
  int k = 0;
  int g = 0;
  int p = 0;
  Graph graph;  // vertex id = row * (p*k + 1) + column, rows and columns 0-based
  VertexSet a;  // first column
  VertexSet b;  // last column
};

/// Builds the instance for path count k >= 1 and girth target g >= 3.
CounterexampleInstance generate_counterexample(int k, int g);

/// Vertex id of 1-based (row i, column j), matching the construction's
/// indexing.
int counterexample_vertex(const CounterexampleInstance& inst, int i, int j);

struct CounterexampleVerification {
  int flow = 0;
  std::optional<int> girth_value;          // unset when k < 2 (acyclic case)
  std::optional<int> degeneracy_value;     // unset when k < 2
  std::optional<int> packing;              // unset when skipped (k < 2 or above cap)
  bool flow_ok = false;
  bool girth_ok = false;                   // true when skipped
  bool degeneracy_ok = false;              // true when skipped
  bool packing_ok = false;                 // true when skipped
  bool path_neighborhood_separators_ok = false;
  std::vector<std::string> failures;       // names of failed claims; empty iff all pass
  bool ok() const { return failures.empty(); }
};

/// Checks the claims the family is built for: flow equals k; for k >= 2,
/// degeneracy exactly 2 and girth exactly 2p + 2 (and >= g); exact packing 1
/// via the oracle when the instance fits under oracle_cap vertices; and for
/// every path P of a maximum disjoint path system, N[P] separates A from B.
CounterexampleVerification verify_counterexample(const CounterexampleInstance& inst,
                                                 int oracle_cap = 24);

}  // namespace apack
