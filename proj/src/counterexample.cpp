#include "apack/counterexample.hpp"

#include <algorithm>

#include "apack/flow.hpp"
#include "apack/oracle.hpp"

namespace apack {

CounterexampleInstance generate_counterexample(int k, int g) {
  if (k < 1) throw input_error("counterexample requires k >= 1");
  if (g < 3) throw input_error("counterexample requires girth target g >= 3");
  CounterexampleInstance inst;
  inst.k = k;
  inst.g = g;
  inst.p = std::max(2, g / 2);
  const int cols = inst.p * k + 1;
  inst.graph = Graph(k * cols);
  auto id = [cols](int row, int col) { return row * cols + col; };
  for (int row = 0; row < k; ++row)
    for (int col = 0; col + 1 < cols; ++col) inst.graph.add_edge(id(row, col), id(row, col + 1));
  for (int i = 1; i <= k; ++i) {
    const int col = inst.p * i - 1;  // 0-based column of star i
    const int center = id(i - 1, col);
    for (int j = 1; j <= k; ++j)
      if (j != i) inst.graph.add_edge(center, id(j - 1, col));
  }
  for (int row = 0; row < k; ++row) {
    inst.a.push_back(id(row, 0));
    inst.b.push_back(id(row, cols - 1));
  }
  return inst;
}

int counterexample_vertex(const CounterexampleInstance& inst, int i, int j) {
  const int cols = inst.p * inst.k + 1;
  if (i < 1 || i > inst.k || j < 1 || j > cols)
    throw input_error("counterexample_vertex: index out of range");
  return (i - 1) * cols + (j - 1);
}

CounterexampleVerification verify_counterexample(const CounterexampleInstance& inst,
                                                 int oracle_cap) {
  CounterexampleVerification report;

  report.flow = flow_value(inst.graph, inst.a, inst.b);
  report.flow_ok = report.flow == inst.k;
  if (!report.flow_ok) report.failures.push_back("flow equals k");

  if (inst.k >= 2) {
    report.degeneracy_value = degeneracy(inst.graph).degeneracy;
    report.degeneracy_ok = *report.degeneracy_value == 2;
    if (!report.degeneracy_ok) report.failures.push_back("degeneracy equals 2");

    report.girth_value = girth(inst.graph);
    report.girth_ok = report.girth_value.has_value() &&
                      *report.girth_value == 2 * inst.p + 2 && *report.girth_value >= inst.g;
    if (!report.girth_ok) report.failures.push_back("girth equals 2p + 2 and is at least g");
  } else {
    report.degeneracy_ok = true;
    report.girth_ok = true;
  }

  if (inst.k >= 2 && inst.graph.vertex_count() <= oracle_cap) {
    OracleBudget budget;
    budget.max_vertices = oracle_cap;
    budget.max_paths_enumerated = 20'000'000;
    report.packing = max_anticomplete_packing(inst.graph, inst.a, inst.b, budget);
    report.packing_ok = *report.packing == 1;
    if (!report.packing_ok) report.failures.push_back("maximum anticomplete packing equals 1");
  } else {
    report.packing_ok = true;
  }

  // N[P] must separate A from B for every path of a maximum flow system
  PathSystem routed = max_disjoint_paths(inst.graph, inst.a, inst.b);
  report.path_neighborhood_separators_ok = true;
  for (const auto& path : routed.paths) {
    VertexSet hull = closed_neighborhood(inst.graph, canonical_set(inst.graph, path));
    if (!is_separator(inst.graph, inst.a, inst.b, hull)) {
      report.path_neighborhood_separators_ok = false;
      break;
    }
  }
  if (!report.path_neighborhood_separators_ok)
    report.failures.push_back("N[P] separates A from B for every maximum-flow path");

  return report;
}

}  // namespace apack
