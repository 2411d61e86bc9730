#include "doctest.h"

#include "apack/counterexample.hpp"
#include "apack/flow.hpp"
#include "apack/oracle.hpp"
#include "support/helpers.hpp"

using namespace apack;
using namespace testsupport;

TEST_CASE("packing basics") {
  Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(max_anticomplete_packing(two_edges, {0, 2}, {1, 3}) == 2);

  CHECK(max_anticomplete_packing(path_graph(3), {0}, {2}) == 1);

  auto small = generate_counterexample(2, 4);  // 10 vertices
  CHECK(max_anticomplete_packing(small.graph, small.a, small.b) == 1);

  auto larger = generate_counterexample(2, 6);  // 14 vertices
  CHECK(max_anticomplete_packing(larger.graph, larger.a, larger.b) == 1);
}

TEST_CASE("exists_k_packing") {
  Graph g = Graph::from_edges(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}});
  VertexSet a{0, 3, 6}, b{2, 5, 8};
  CHECK(exists_k_packing(g, a, b, 0));
  CHECK(exists_k_packing(g, a, b, 3));
  CHECK_FALSE(exists_k_packing(g, a, b, 4));

  auto inst = generate_counterexample(3, 4);  // 21 vertices
  OracleBudget budget;
  budget.max_vertices = 24;
  CHECK(exists_k_packing(inst.graph, inst.a, inst.b, 1, budget));
  CHECK_FALSE(exists_k_packing(inst.graph, inst.a, inst.b, 2, budget));
}

TEST_CASE("budgets are enforced, never silently ignored") {
  auto inst = generate_counterexample(3, 4);  // 21 vertices > default cap 16
  CHECK_THROWS_AS(max_anticomplete_packing(inst.graph, inst.a, inst.b), budget_error);

  OracleBudget tiny;
  tiny.max_vertices = 24;
  tiny.max_paths_enumerated = 3;
  CHECK_THROWS_AS(max_anticomplete_packing(inst.graph, inst.a, inst.b, tiny), budget_error);

  OracleBudget bad;
  bad.max_vertices = 0;
  CHECK_THROWS_AS(max_anticomplete_packing(inst.graph, inst.a, inst.b, bad), input_error);
}

TEST_CASE("oracle never exceeds the flow and matches the naive search") {
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = random_instance(7000 + trial, 10, trial % 2 ? 0.2 : 0.35, 2);
    int packing = max_anticomplete_packing(inst.graph, inst.a, inst.b);
    CHECK(packing <= flow_value(inst.graph, inst.a, inst.b));
    CHECK(packing == naive_max_anticomplete_packing(inst.graph, inst.a, inst.b));
  }
}

TEST_CASE("empty terminal sets") {
  Graph g = path_graph(4);
  CHECK(max_anticomplete_packing(g, {}, {3}) == 0);
  CHECK(max_anticomplete_packing(g, {}, {}) == 0);
}

TEST_CASE("overlapping terminal sets count one-vertex paths") {
  Graph g = Graph::from_edges(3, {{0, 1}});  // vertex 2 isolated
  CHECK(max_anticomplete_packing(g, {0, 2}, {1, 2}) == 2);
  CHECK(naive_max_anticomplete_packing(g, {0, 2}, {1, 2}) == 2);

  // adjacent vertices that are each on both sides: their one-vertex paths
  // are disjoint but not anticomplete, so only one fits
  Graph edge = Graph::from_edges(2, {{0, 1}});
  CHECK(max_anticomplete_packing(edge, {0, 1}, {0, 1}) == 1);
  CHECK(naive_max_anticomplete_packing(edge, {0, 1}, {0, 1}) == 1);

  CHECK(flow_value(Graph(0), {}, {}) == 0);
}
