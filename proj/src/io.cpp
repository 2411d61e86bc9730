#include "apack/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace apack {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw input_error("line " + std::to_string(line) + ": " + message);
}

}  // namespace

TerminalInstance parse_instance(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw input_error("missing trailing newline");

  bool got_header = false;
  int n = 0, declared_edges = 0, seen_edges = 0;
  Graph graph;
  VertexSet a, b;

  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) fail(ln, "empty line");
    auto expect_end = [&]() {
      std::string extra;
      if (fields >> extra) fail(ln, "trailing field '" + extra + "'");
    };
    if (kind == "p") {
      if (got_header) fail(ln, "duplicate header");
      if (!(fields >> n >> declared_edges)) fail(ln, "malformed header, expected 'p <n> <m>'");
      expect_end();
      if (n < 0 || declared_edges < 0) fail(ln, "negative count in header");
      graph = Graph(n);
      got_header = true;
    } else if (kind == "e" || kind == "a" || kind == "b") {
      if (!got_header) fail(ln, "record before 'p' header");
      if (kind == "e") {
        int u = 0, v = 0;
        if (!(fields >> u >> v)) fail(ln, "malformed edge, expected 'e <u> <v>'");
        expect_end();
        if (u < 0 || v < 0 || u >= n || v >= n) fail(ln, "edge endpoint out of range");
        if (u >= v) fail(ln, "edges must satisfy u < v");
        if (graph.has_edge(u, v)) fail(ln, "duplicate edge");
        graph.add_edge(u, v);
        ++seen_edges;
      } else {
        int u = 0;
        if (!(fields >> u)) fail(ln, "malformed terminal line");
        expect_end();
        if (u < 0 || u >= n) fail(ln, "terminal id out of range");
        (kind == "a" ? a : b).push_back(u);
      }
    } else {
      fail(ln, "unknown record type '" + kind + "'");
    }
  }
  if (!got_header) throw input_error("missing 'p <n> <m>' header");
  if (seen_edges != declared_edges)
    throw input_error("header declared " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(seen_edges));
  VertexSet a_set = canonical_set(graph, std::move(a));
  VertexSet b_set = canonical_set(graph, std::move(b));
  return {std::move(graph), std::move(a_set), std::move(b_set)};
}

TerminalInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string emit_instance(const TerminalInstance& inst) {
  std::ostringstream out;
  out << "p " << inst.graph.vertex_count() << " " << inst.graph.edge_count() << "\n";
  for (int v : inst.a) out << "a " << v << "\n";
  for (int v : inst.b) out << "b " << v << "\n";
  for (const auto& [u, v] : inst.graph.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

void save_instance(const TerminalInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open '" + path + "' for writing");
  out << emit_instance(inst);
}

}  // namespace apack
