#include "doctest.h"

#include "apack/counterexample.hpp"
#include "apack/flow.hpp"
#include "apack/generators.hpp"
#include "apack/minorfree.hpp"
#include "apack/oracle.hpp"
#include "support/helpers.hpp"

using namespace apack;
using namespace testsupport;

namespace {

// left column to right column of a grid
TestInstance grid_instance(int rows, int cols) {
  TestInstance inst;
  inst.graph = grid_graph(rows, cols);
  for (int r = 0; r < rows; ++r) {
    inst.a.push_back(r * cols);
    inst.b.push_back(r * cols + cols - 1);
  }
  return inst;
}

}  // namespace

TEST_CASE("build_conflict_graph") {
  SUBCASE("anticomplete paths give an edgeless graph") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    PathSystem system;
    system.paths = {{0, 1, 2}, {3, 4, 5}};
    auto conflict = build_conflict_graph(g, system);
    CHECK(conflict.base == Graph(2));
  }

  SUBCASE("one cross edge gives one conflict edge") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
    PathSystem system;
    system.paths = {{0, 1, 2}, {3, 4, 5}};
    auto conflict = build_conflict_graph(g, system);
    CHECK(conflict.base == Graph::from_edges(2, {{0, 1}}));
  }

  SUBCASE("grid rows conflict exactly with their neighbors") {
    auto inst = grid_instance(4, 6);
    PathSystem rows;
    for (int r = 0; r < 4; ++r) {
      std::vector<int> row;
      for (int c = 0; c < 6; ++c) row.push_back(r * 6 + c);
      rows.paths.push_back(row);
    }
    auto conflict = build_conflict_graph(inst.graph, rows);
    CHECK(conflict.base == path_graph(4));
  }

  SUBCASE("overlapping paths are rejected") {
    Graph g = path_graph(3);
    PathSystem system;
    system.paths = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(build_conflict_graph(g, system), input_error);
  }
}

TEST_CASE("greedy_independent_set") {
  CHECK(greedy_independent_set(Graph(4)) == VertexSet{0, 1, 2, 3});
  CHECK(greedy_independent_set(complete_graph(5)) == VertexSet{0});
  CHECK(greedy_independent_set(path_graph(5)) == VertexSet{0, 2, 4});
  CHECK(brute_max_independent_set(path_graph(5)) == 3);

  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_density_graph(12, 0.3, 11'000 + trial);
    VertexSet chosen = greedy_independent_set(g);
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j)
        CHECK_FALSE(g.has_edge(chosen[i], chosen[j]));
    long long mm = g.edge_count();
    long long n = g.vertex_count();
    CHECK(static_cast<long long>(chosen.size()) >= ceil_div(n * n, 2 * mm + n));
  }
}

TEST_CASE("solve_minor_free") {
  SUBCASE("already anticomplete systems are kept whole") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    auto solution = solve_minor_free(g, {0, 3}, {2, 5});
    CHECK(solution.paths.paths.size() == 2);
    CHECK(solution.report.t == 2);
    CHECK(solution.report.avg_degree == 0.0);
    CHECK(solution.report.is_size == 2);
  }

  SUBCASE("5x9 grid keeps three of its five rows") {
    auto inst = grid_instance(5, 9);
    auto solution = solve_minor_free(inst.graph, inst.a, inst.b);
    CHECK(solution.report.t == 5);
    CHECK(solution.report.is_size == 3);
    CHECK(solution.paths.paths.size() == 3);
    CHECK(solution.paths.pairwise_anticomplete);
    CHECK(check_path_system(inst.graph, inst.a, inst.b, solution.paths.paths).ok());
  }

  SUBCASE("hard instance: all rows conflict, one path returned") {
    auto inst = generate_counterexample(3, 4);
    auto solution = solve_minor_free(inst.graph, inst.a, inst.b);
    CHECK(solution.report.t == 3);
    // every pair of rows meets at a star column
    auto routed = max_disjoint_paths(inst.graph, inst.a, inst.b);
    auto conflict = build_conflict_graph(inst.graph, routed);
    CHECK(connected_components(conflict.base).size() == 1);
    CHECK(solution.paths.paths.size() == 1);
    OracleBudget budget;
    budget.max_vertices = 24;
    CHECK(max_anticomplete_packing(inst.graph, inst.a, inst.b, budget) == 1);
  }

  SUBCASE("certified bound holds on random instances") {
    for (int trial = 0; trial < 20; ++trial) {
      auto inst = random_instance(12'000 + trial, 13, 0.3, 3);
      auto solution = solve_minor_free(inst.graph, inst.a, inst.b);
      CHECK(solution.report.is_size >= solution.report.certified_bound);
      CHECK(static_cast<int>(solution.paths.paths.size()) == solution.report.is_size);
      CHECK(check_path_system(inst.graph, inst.a, inst.b, solution.paths.paths).ok());
    }
  }
}

TEST_CASE("the conflict graph is the path-contraction minor") {
  auto inst = grid_instance(4, 5);
  auto routed = max_disjoint_paths(inst.graph, inst.a, inst.b);
  auto conflict = build_conflict_graph(inst.graph, routed);

  std::vector<VertexSet> blobs;
  for (const auto& path : routed.paths) blobs.push_back(canonical_set(inst.graph, path));
  auto contracted = contract_sets(inst.graph, blobs);
  // blob vertices sit after the untouched ones, in path order
  int untouched = contracted.graph.vertex_count() - static_cast<int>(blobs.size());
  VertexSet blob_ids;
  for (size_t i = 0; i < blobs.size(); ++i) blob_ids.push_back(untouched + static_cast<int>(i));
  auto minor = induced_subgraph(contracted.graph, blob_ids);
  CHECK(minor.graph == conflict.base);
}
