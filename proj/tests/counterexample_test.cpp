#include "doctest.h"

#include "apack/counterexample.hpp"
#include "apack/flow.hpp"
#include "apack/oracle.hpp"
#include "support/helpers.hpp"

using namespace apack;
using namespace testsupport;

TEST_CASE("generation") {
  SUBCASE("k=5, g=4 matches the published shape") {
    auto inst = generate_counterexample(5, 4);
    CHECK(inst.p == 2);
    CHECK(inst.graph.vertex_count() == 55);
    CHECK(inst.graph.edge_count() == 70);  // 50 row edges + 20 star edges
    CHECK(inst.a.size() == 5);
    CHECK(inst.b.size() == 5);
    CHECK(counterexample_vertex(inst, 1, 1) == 0);
    CHECK(counterexample_vertex(inst, 2, 1) == 11);
    // star centered on row i at column p*i
    CHECK(inst.graph.has_edge(counterexample_vertex(inst, 1, 2),
                              counterexample_vertex(inst, 4, 2)));
    CHECK_FALSE(inst.graph.has_edge(counterexample_vertex(inst, 2, 2),
                                    counterexample_vertex(inst, 3, 2)));
  }

  SUBCASE("k=1 degenerates to a bare path") {
    auto inst = generate_counterexample(1, 4);
    CHECK(inst.graph == path_graph(3));
    CHECK(inst.a == VertexSet{0});
    CHECK(inst.b == VertexSet{2});
  }

  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(generate_counterexample(0, 4), input_error);
    CHECK_THROWS_AS(generate_counterexample(2, 2), input_error);
  }
}

TEST_CASE("verification") {
  SUBCASE("k=2, g=4") {
    auto report = verify_counterexample(generate_counterexample(2, 4));
    CHECK(report.ok());
    CHECK(report.flow == 2);
    CHECK(report.girth_value == 6);
    CHECK(report.degeneracy_value == 2);
    CHECK(report.packing == 1);
  }

  SUBCASE("k=3, g=6 is above the oracle cap") {
    auto inst = generate_counterexample(3, 6);
    CHECK(inst.p == 3);
    CHECK(inst.graph.vertex_count() == 30);
    auto report = verify_counterexample(inst);
    CHECK(report.ok());
    CHECK(report.flow == 3);
    CHECK(report.girth_value == 8);
    CHECK_FALSE(report.packing.has_value());
  }

  SUBCASE("k=1 skips the cyclic claims") {
    auto report = verify_counterexample(generate_counterexample(1, 4));
    CHECK(report.ok());
    CHECK(report.flow == 1);
    CHECK_FALSE(report.girth_value.has_value());
    CHECK_FALSE(report.degeneracy_value.has_value());
    CHECK_FALSE(report.packing.has_value());
  }
}

TEST_CASE("every star neighborhood is a separator") {
  for (int k : {3, 4}) {
    auto inst = generate_counterexample(k, 4);
    for (int i = 1; i <= k; ++i) {
      VertexSet center{counterexample_vertex(inst, i, inst.p * i)};
      CHECK(is_separator(inst.graph, inst.a, inst.b,
                         closed_neighborhood(inst.graph, center)));
    }
  }
}

TEST_CASE("degree-2 peeling order certifies the degeneracy") {
  auto inst = generate_counterexample(4, 6);
  auto result = degeneracy(inst.graph);
  CHECK(result.degeneracy == 2);
  CHECK(result.elimination_order.size() ==
        static_cast<size_t>(inst.graph.vertex_count()));
}
