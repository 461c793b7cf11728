#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soficshift/graph.hpp"

namespace soficshift {

struct Predicates {
  bool left_resolving = false;
  bool right_resolving = false;
  bool essential = false;
  bool irreducible_graph = false;
  /// Unset when the graph is not essential.
  std::optional<bool> predecessor_separated;
};

bool is_left_resolving(const LabelledGraph& g);
bool is_right_resolving(const LabelledGraph& g);
bool is_essential(const LabelledGraph& g);
/// One strongly connected component and at least one edge.
bool is_irreducible_graph(const LabelledGraph& g);
/// Throws PredSepRequiresEssential on non-essential input.
bool is_predecessor_separated(const LabelledGraph& g);
Predicates predicates(const LabelledGraph& g);

/// Repeatedly removes vertices without outgoing or incoming edges.
/// Throws EmptyAfterTrim if nothing is left.
LabelledGraph trim_to_essential(const LabelledGraph& g);
/// Surviving vertices of the trim, possibly empty. Never throws.
VertexSet essential_core(const LabelledGraph& g);

LabelledGraph transpose(const LabelledGraph& g);

/// Replaces every edge u -a-> v by u -a-> m -fresh-> v with a new midpoint m
/// named "u|a|v" (primes appended on collision).
LabelledGraph symbol_expand(const LabelledGraph& g, const std::string& a,
                            const std::string& fresh);

/// Subgraph on `keep`. With `require_presentation` an induced graph without
/// edges throws EmptyInducedAlphabet.
LabelledGraph induced_subgraph(const LabelledGraph& g, const VertexSet& keep,
                               bool require_presentation = true);

/// Vertex names get prefixes "1/" and "2/". Alphabets must be disjoint.
LabelledGraph disjoint_union(const LabelledGraph& g1, const LabelledGraph& g2);

struct SccDecomposition {
  /// component[v] = index of v's component.
  std::vector<std::uint32_t> component;
  /// Members of each component; components ordered by least vertex.
  std::vector<std::vector<VertexId>> members;
  /// True when the component contains at least one edge.
  std::vector<bool> cyclic;
  /// Deduplicated arcs between distinct components, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> condensation;

  std::size_t size() const noexcept { return members.size(); }
};

SccDecomposition scc(const LabelledGraph& g);
/// Same decomposition for a plain digraph on 0..n-1.
SccDecomposition scc(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs);

/// Vertex bijection preserving labelled edges, or nullopt. Vertex names are
/// ignored; symbols are matched by name.
std::optional<std::vector<VertexId>> find_labelled_isomorphism(const LabelledGraph& a,
                                                               const LabelledGraph& b);
bool labelled_isomorphic(const LabelledGraph& a, const LabelledGraph& b);

/// Renames symbols through `mapping` (unlisted symbols keep their names).
LabelledGraph relabel(const LabelledGraph& g,
                      const std::vector<std::pair<std::string, std::string>>& mapping);

}  // namespace soficshift
