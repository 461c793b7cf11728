#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "soficshift/graph.hpp"

namespace soficshift {

// Line-oriented text format:
//
//   graph <name>          optional, must be the first construct
//   vertex <name>         optional, fixes declaration order
//   <src> <label> <dst>   one edge
//
// '#' starts a comment. Blank lines are ignored.

/// Throws Parse (with a line number) on malformed input and InvalidGraph on
/// structural problems such as duplicate edges.
LabelledGraph parse_graph(std::string_view text, std::string default_name = "g");
LabelledGraph read_graph_file(const std::filesystem::path& path);

/// Vertices in declaration order, then edges sorted by (src, label, dst).
/// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const LabelledGraph& g);

/// Splits `text` into lines with comments stripped and tokens separated.
/// Shared with the DAG format.
struct TokenLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};
std::vector<TokenLine> tokenize_lines(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace soficshift
