#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soficshift/vertex_set.hpp"

namespace soficshift {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// True if `name` is usable as a vertex name or symbol: nonempty, no
/// whitespace, no '#'.
bool is_valid_token(std::string_view name) noexcept;

/// Sorted, duplicate-free list of symbols. Symbol indices follow the sorted
/// order, so two alphabets over the same names index identically.
class Alphabet {
 public:
  Alphabet() = default;
  /// Sorts `symbols`; throws InvalidGraph on duplicates or invalid tokens.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::string& operator[](Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Symbol> find(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept { return find(name).has_value(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

struct Edge {
  VertexId src = 0;
  Symbol label = 0;
  VertexId dst = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct NamedEdge {
  std::string src;
  std::string label;
  std::string dst;
};

/// Finite directed multigraph with labelled edges. Immutable once built.
///
/// Edges are kept sorted by (src, label, dst); exact duplicates are rejected.
/// The alphabet is exactly the set of labels in use, so the labelling map is
/// surjective by construction. A graph without vertices is the empty graph.
class LabelledGraph {
 public:
  LabelledGraph();

  /// Vertices listed in `vertices` come first, in that order; endpoints that
  /// only appear in `edges` are appended in order of first appearance.
  static LabelledGraph from_named(std::string name, std::vector<std::string> vertices,
                                  const std::vector<NamedEdge>& edges);

  /// Index-level constructor used by transforms. `alphabet` may contain
  /// symbols that no edge uses; they are dropped and labels re-indexed.
  static LabelledGraph from_indexed(std::string name, std::vector<std::string> vertices,
                                    const std::vector<std::string>& alphabet,
                                    std::vector<Edge> edges);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  std::optional<VertexId> find_vertex(std::string_view name) const noexcept;
  /// Throws InvalidArgument for unknown names.
  VertexId vertex(std::string_view name) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> out_edges(VertexId v) const;
  std::span<const std::uint32_t> in_edges(VertexId v) const;
  bool has_edge(VertexId src, Symbol label, VertexId dst) const;

  /// {u : u -a-> v}
  const VertexSet& predecessors(Symbol a, VertexId v) const;
  /// {w : v -a-> w}
  const VertexSet& successors(Symbol a, VertexId v) const;
  /// aU = {u : u -a-> t for some t in U}
  VertexSet prepend(Symbol a, const VertexSet& targets) const;
  /// {w : u -a-> w for some u in U}
  VertexSet advance(Symbol a, const VertexSet& sources) const;

  std::uint64_t id() const noexcept { return id_; }
  VertexSet empty_set() const { return VertexSet(id_, vertices_.size()); }
  VertexSet all_vertices() const;
  VertexSet singleton(VertexId v) const;
  VertexSet vertex_set(std::initializer_list<std::string_view> names) const;
  VertexSet vertex_set(std::span<const VertexId> members) const;

  /// Symbols of a word given as names; nullopt if any is not in the alphabet.
  std::optional<Word> word(std::span<const std::string> symbols) const;
  /// Splits on whitespace; a single token that is not a symbol is split into
  /// characters when every symbol is one byte long ("dbj" -> d b j).
  std::optional<Word> parse_word(std::string_view text) const;
  std::string word_text(std::span<const Symbol> w) const;

  /// Structural equality: name, vertex list, alphabet and edges. Ignores id().
  friend bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.alphabet_ == b.alphabet_ &&
           a.edges_ == b.edges_;
  }

 private:
  void index();

  std::uint64_t id_ = 0;
  std::string name_;
  std::vector<std::string> vertices_;
  Alphabet alphabet_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_, out_list_, in_offsets_, in_list_;
  std::vector<VertexSet> pred_;  // [label * n + v]
  std::vector<VertexSet> succ_;  // [label * n + v]
};

}  // namespace soficshift
