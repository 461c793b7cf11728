#include "soficshift/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "soficshift/error.hpp"

namespace soficshift {

namespace {

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

bool is_valid_token(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!is_valid_token(symbols_[i])) {
      fail(ErrorCode::InvalidGraph, "invalid symbol '" + symbols_[i] + "'");
    }
    if (i > 0 && symbols_[i] == symbols_[i - 1]) {
      fail(ErrorCode::InvalidGraph, "duplicate symbol '" + symbols_[i] + "'");
    }
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const noexcept {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end() || *it != name) return std::nullopt;
  return static_cast<Symbol>(it - symbols_.begin());
}

LabelledGraph::LabelledGraph() : id_(next_graph_id()) {}

LabelledGraph LabelledGraph::from_named(std::string name, std::vector<std::string> vertices,
                                        const std::vector<NamedEdge>& edges) {
  std::unordered_map<std::string, VertexId> index;
  for (const auto& v : vertices) {
    if (!is_valid_token(v)) fail(ErrorCode::InvalidGraph, "invalid vertex name '" + v + "'");
    if (!index.emplace(v, static_cast<VertexId>(index.size())).second) {
      fail(ErrorCode::InvalidGraph, "duplicate vertex '" + v + "'");
    }
  }
  auto vertex_of = [&](const std::string& v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (!is_valid_token(v)) fail(ErrorCode::InvalidGraph, "invalid vertex name '" + v + "'");
    const auto id = static_cast<VertexId>(vertices.size());
    vertices.push_back(v);
    index.emplace(v, id);
    return id;
  };

  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(e.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  Alphabet alphabet(labels);

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    const VertexId s = vertex_of(e.src);
    const VertexId d = vertex_of(e.dst);
    out.push_back(Edge{s, *alphabet.find(e.label), d});
  }
  return from_indexed(std::move(name), std::move(vertices), alphabet.symbols(), std::move(out));
}

LabelledGraph LabelledGraph::from_indexed(std::string name, std::vector<std::string> vertices,
                                          const std::vector<std::string>& alphabet,
                                          std::vector<Edge> edges) {
  LabelledGraph g;
  g.name_ = std::move(name);
  {
    std::vector<std::string> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (!is_valid_token(sorted[i])) {
        fail(ErrorCode::InvalidGraph, "invalid vertex name '" + sorted[i] + "'");
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        fail(ErrorCode::InvalidGraph, "duplicate vertex '" + sorted[i] + "'");
      }
    }
  }
  g.vertices_ = std::move(vertices);

  // Keep only labels that occur, then re-index against the sorted alphabet.
  std::vector<bool> used(alphabet.size(), false);
  for (const auto& e : edges) {
    if (e.label >= alphabet.size()) fail(ErrorCode::InvalidGraph, "edge label out of range");
    if (e.src >= g.vertices_.size() || e.dst >= g.vertices_.size()) {
      fail(ErrorCode::InvalidGraph, "edge endpoint is not a declared vertex");
    }
    used[e.label] = true;
  }
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (used[i]) kept.push_back(alphabet[i]);
  }
  g.alphabet_ = Alphabet(kept);
  for (auto& e : edges) e.label = *g.alphabet_.find(alphabet[e.label]);

  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      const auto& e = edges[i];
      fail(ErrorCode::InvalidGraph, "duplicate edge " + g.vertices_[e.src] + " " +
                                        g.alphabet_[e.label] + " " + g.vertices_[e.dst]);
    }
  }
  g.edges_ = std::move(edges);
  g.index();
  return g;
}

void LabelledGraph::index() {
  const std::size_t n = vertices_.size();
  const std::size_t m = edges_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_list_.assign(m, 0);
  in_list_.assign(m, 0);
  std::vector<std::uint32_t> oi(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::uint32_t> ii(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t k = 0; k < m; ++k) {
    out_list_[oi[edges_[k].src]++] = k;
    in_list_[ii[edges_[k].dst]++] = k;
  }
  const std::size_t k = alphabet_.size();
  pred_.assign(k * n, VertexSet(id_, n));
  succ_.assign(k * n, VertexSet(id_, n));
  for (const auto& e : edges_) {
    pred_[e.label * n + e.dst].set(e.src);
    succ_[e.label * n + e.src].set(e.dst);
  }
}

std::optional<VertexId> LabelledGraph::find_vertex(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId LabelledGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) fail(ErrorCode::InvalidArgument, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::span<const std::uint32_t> LabelledGraph::out_edges(VertexId v) const {
  return std::span<const std::uint32_t>(out_list_).subspan(out_offsets_.at(v),
                                                           out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const std::uint32_t> LabelledGraph::in_edges(VertexId v) const {
  return std::span<const std::uint32_t>(in_list_).subspan(in_offsets_.at(v),
                                                          in_offsets_[v + 1] - in_offsets_[v]);
}

bool LabelledGraph::has_edge(VertexId src, Symbol label, VertexId dst) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, label, dst});
}

const VertexSet& LabelledGraph::predecessors(Symbol a, VertexId v) const {
  return pred_.at(a * vertices_.size() + v);
}

const VertexSet& LabelledGraph::successors(Symbol a, VertexId v) const {
  return succ_.at(a * vertices_.size() + v);
}

VertexSet LabelledGraph::prepend(Symbol a, const VertexSet& targets) const {
  VertexSet out = empty_set();
  const std::size_t n = vertices_.size();
  targets.for_each([&](VertexId t) { out |= pred_[a * n + t]; });
  return out;
}

VertexSet LabelledGraph::advance(Symbol a, const VertexSet& sources) const {
  VertexSet out = empty_set();
  const std::size_t n = vertices_.size();
  sources.for_each([&](VertexId s) { out |= succ_[a * n + s]; });
  return out;
}

VertexSet LabelledGraph::all_vertices() const {
  VertexSet s = empty_set();
  s.fill();
  return s;
}

VertexSet LabelledGraph::singleton(VertexId v) const {
  VertexSet s = empty_set();
  s.set(v);
  return s;
}

VertexSet LabelledGraph::vertex_set(std::initializer_list<std::string_view> names) const {
  VertexSet s = empty_set();
  for (auto n : names) s.set(vertex(n));
  return s;
}

VertexSet LabelledGraph::vertex_set(std::span<const VertexId> members) const {
  VertexSet s = empty_set();
  for (auto v : members) s.set(v);
  return s;
}

std::optional<Word> LabelledGraph::word(std::span<const std::string> symbols) const {
  Word w;
  w.reserve(symbols.size());
  for (const auto& s : symbols) {
    auto idx = alphabet_.find(s);
    if (!idx) return std::nullopt;
    w.push_back(*idx);
  }
  return w;
}

std::optional<Word> LabelledGraph::parse_word(std::string_view text) const {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && !alphabet_.contains(tokens[0])) {
    const bool single_byte = std::all_of(alphabet_.symbols().begin(), alphabet_.symbols().end(),
                                         [](const std::string& s) { return s.size() == 1; });
    if (single_byte) {
      std::vector<std::string> chars;
      for (char c : tokens[0]) chars.emplace_back(1, c);
      tokens = std::move(chars);
    }
  }
  return word(tokens);
}

std::string LabelledGraph::word_text(std::span<const Symbol> w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet_[w[i]];
  }
  return out;
}

}  // namespace soficshift
