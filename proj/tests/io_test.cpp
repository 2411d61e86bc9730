#include "doctest.h"

#include <string>

#include "apack/counterexample.hpp"
#include "apack/io.hpp"
#include "support/helpers.hpp"

using namespace apack;
using namespace testsupport;

TEST_CASE("parse a handwritten instance") {
  std::string text =
      "# a small instance\n"
      "p 4 3\n"
      "a 0\n"
      "b 3\n"
      "e 0 1\n"
      "e 1 2\n"
      "e 2 3\n";
  auto inst = parse_instance(text);
  CHECK(inst.graph == path_graph(4));
  CHECK(inst.a == VertexSet{0});
  CHECK(inst.b == VertexSet{3});
}

TEST_CASE("emit is canonical") {
  TerminalInstance inst{path_graph(3), {0}, {2}};
  CHECK(emit_instance(inst) == "p 3 2\na 0\nb 2\ne 0 1\ne 1 2\n");
}

TEST_CASE("round trip over random instances") {
  for (int trial = 0; trial < 25; ++trial) {
    auto random = random_instance(5000 + trial, 11, 0.3, 2);
    TerminalInstance inst{random.graph, random.a, random.b};
    auto back = parse_instance(emit_instance(inst));
    CHECK(back.graph == inst.graph);
    CHECK(back.a == inst.a);
    CHECK(back.b == inst.b);
  }
  auto hard = generate_counterexample(3, 6);
  auto back = parse_instance(emit_instance({hard.graph, hard.a, hard.b}));
  CHECK(back.graph == hard.graph);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_instance(text);
      FAIL_CHECK("expected input_error for: " << text);
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("p 2 1\ne 0 1", "trailing newline");
  expect_error("e 0 1\n", "line 1");
  expect_error("p 2 1\ne 1 0\n", "u < v");
  expect_error("p 2 1\ne 0 5\n", "line 2");
  expect_error("p 2 0\nq 1\n", "unknown record");
  expect_error("p 2 2\ne 0 1\n", "declared 2 edges");
  expect_error("p 2 1\ne 0 1\ne 0 1\n", "duplicate");
  expect_error("p 2 0\np 2 0\n", "duplicate header");
  expect_error("p 2 0\na 7\n", "out of range");
  expect_error("p 2 0\n\n", "line 2");
  expect_error("p 2 0 9\n", "trailing field");
}
