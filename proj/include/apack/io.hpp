#pragma once

#include <iosfwd>
#include <string>

#include "apack/graph.hpp"

namespace apack {

/// A graph together with the two terminal sets A and B.
struct TerminalInstance {
  Graph graph;
  VertexSet a;
  VertexSet b;
};

/// Text format, one record per line, space-separated, trailing newline
/// required:
///   # comment            anywhere
///   p <n> <m>            header, exactly once, before any other record
///   e <u> <v>            edge, 0-based ids with u < v
///   a <u>  /  b <u>      terminal membership
/// parse_instance throws input_error with a line number on malformed input.
TerminalInstance parse_instance(const std::string& text);
TerminalInstance load_instance(const std::string& path);

/// Canonical emission: header, then a-lines, b-lines, and edges in
/// lexicographic order. parse_instance(emit_instance(x)) reproduces x.
std::string emit_instance(const TerminalInstance& inst);
void save_instance(const TerminalInstance& inst, const std::string& path);

}  // namespace apack
