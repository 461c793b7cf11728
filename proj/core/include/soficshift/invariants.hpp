#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soficshift/covers.hpp"
#include "soficshift/graph.hpp"

namespace soficshift {

using Arc = std::pair<std::uint32_t, std::uint32_t>;

/// Plain digraph on nodes 0..node_count-1 with sorted, duplicate-free arcs.
struct Digraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;

  static Digraph make(std::size_t n, std::vector<Arc> arcs);
  bool has_arc(std::uint32_t u, std::uint32_t v) const;
  bool acyclic() const;
  /// All pairs (u, v), u != v, with a nonempty path u -> v.
  Digraph closure() const;
  /// Minimal digraph with the same closure. Requires acyclic input.
  Digraph reduction() const;
  friend bool operator==(const Digraph&, const Digraph&) = default;
};

struct ProperCommunicationGraph {
  /// Cyclic strongly connected components of the source graph.
  std::vector<VertexSet> nodes;
  std::vector<std::string> names;
  /// Reachability between nodes (transitively closed).
  Digraph closure;
  /// Transitive reduction of `closure`, for display.
  Digraph reduced;
  /// Node that reaches every other node, if there is one.
  std::optional<std::uint32_t> root;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t arc_count() const noexcept { return closure.arcs.size(); }
};

ProperCommunicationGraph proper_communication_graph(const LabelledGraph& g);
/// Proper communication graph of the Krieger cover of g.
ProperCommunicationGraph pcg_invariant(const LabelledGraph& g, const CoverOptions& opts = {});

/// Exact isomorphism of unlabelled digraphs (refinement plus backtracking).
bool dag_isomorphic(const Digraph& a, const Digraph& b);
/// Compares the transitive closures.
bool dag_isomorphic(const ProperCommunicationGraph& a, const ProperCommunicationGraph& b);

/// First of "•", "•'", "•''", ... not in the alphabet of g.
std::string fresh_symbol(const LabelledGraph& g);
/// pcg_invariant(g) and pcg_invariant(symbol_expand(g, a, fresh)) agree.
bool flow_expand_check(const LabelledGraph& g, const std::string& a, const CoverOptions& opts = {});

/// False iff some strongly connected component with an edge is one simple
/// cycle (as many internal edges as vertices).
bool condition_K(const LabelledGraph& g);

inline constexpr std::size_t kDefaultLatticeCap = 20;

struct IdealLattice {
  /// Hereditary saturated subsets ordered by (size, members).
  std::vector<VertexSet> elements;
  /// Covering relation: (i, j) when elements[i] is a maximal proper subset
  /// of elements[j] within the lattice.
  Digraph hasse;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const VertexSet& s) const;
};

bool is_hereditary(const LabelledGraph& g, const VertexSet& h);
bool is_saturated(const LabelledGraph& g, const VertexSet& h);
/// Smallest hereditary saturated set containing h.
VertexSet hereditary_saturation(const LabelledGraph& g, const VertexSet& h);

/// Exhaustive scan of all vertex subsets; throws CapExceeded above `cap`
/// vertices.
IdealLattice hereditary_saturated_subsets(const LabelledGraph& g,
                                          std::size_t cap = kDefaultLatticeCap);

}  // namespace soficshift
