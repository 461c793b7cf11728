#include "soficshift/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "soficshift/error.hpp"

namespace soficshift {

std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    TokenLine tl{number, {}};
    for (std::string tok; in >> tok;) tl.tokens.push_back(std::move(tok));
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

LabelledGraph parse_graph(std::string_view text, std::string default_name) {
  std::string name = std::move(default_name);
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  bool first = true;
  for (const auto& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    auto where = "line " + std::to_string(line.number) + ": ";
    if (t[0] == "graph" && t.size() == 2) {
      if (!first) fail(ErrorCode::Parse, where + "'graph' must come first");
      name = t[1];
    } else if (t[0] == "vertex" && t.size() == 2) {
      vertices.push_back(t[1]);
    } else if (t.size() == 3) {
      edges.push_back(NamedEdge{t[0], t[1], t[2]});
    } else {
      fail(ErrorCode::Parse, where + "expected '<src> <label> <dst>'");
    }
    first = false;
  }
  return LabelledGraph::from_named(std::move(name), std::move(vertices), edges);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabelledGraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path), path.stem().string());
}

std::string serialize_graph(const LabelledGraph& g) {
  std::string out = "graph " + g.name() + "\n";
  for (const auto& v : g.vertex_names()) out += "vertex " + v + "\n";
  for (const auto& e : g.edges()) {
    out += g.vertex_name(e.src) + " " + g.alphabet()[e.label] + " " + g.vertex_name(e.dst) + "\n";
  }
  return out;
}

}  // namespace soficshift
