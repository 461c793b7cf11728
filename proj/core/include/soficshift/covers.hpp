#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soficshift/graph.hpp"
#include "soficshift/language.hpp"
#include "soficshift/subset_dynamics.hpp"

namespace soficshift {

enum class CoverKind { PastSet, Krieger, Fischer, GeneralizedFischer, Multiplicity };

std::string_view to_string(CoverKind kind) noexcept;

struct VertexFlags {
  bool krieger = false;
  bool non_decomposable = false;
  bool in_gfc = false;
  bool in_fischer_top = false;
  bool essential_part = false;
};

struct CoverVertex {
  /// Class of `representative` in the base graph.
  PredecessorClassKey class_key;
  /// Smallest S(w) in the class, over the base graph.
  VertexSet representative;
  /// A shortest nonempty w with S(w) == representative. Empty for classes
  /// reached only through rays.
  Word witness_word;
  /// For classes of right-rays: the ray ray_prefix * ray_period^omega.
  Word ray_prefix;
  Word ray_period;
  /// Set by layers(); 1-based.
  std::optional<std::size_t> layer;
  /// Foundation vertices whose union realizes the class, set by layers().
  std::vector<VertexId> decomposition;
  /// "P(u)∪P(v)" once a decomposition is known, else the graph vertex name.
  std::string display_name;
  VertexFlags flags;
};

struct CoverResult {
  CoverKind kind = CoverKind::Krieger;
  LabelledGraph graph;
  /// Graph the representatives live in: the input presentation, or its
  /// Fischer cover for multiplicity covers.
  std::shared_ptr<const LabelledGraph> base;
  std::vector<CoverVertex> vertices;

  std::optional<VertexId> find(const PredecessorClassKey& key) const;
  std::vector<PredecessorClassKey> keys() const;
  /// Number of vertices per layer; vertices without a layer are skipped.
  std::map<std::size_t, std::size_t> layer_histogram() const;
  /// Induced subgraph on the vertices of layer `n` (throws if none).
  LabelledGraph layer_subgraph(std::size_t n) const;
};

struct CoverOptions {
  std::size_t subset_cap = kDefaultSubsetCap;
  std::size_t monoid_cap = kDefaultMonoidCap;
  /// Check left-resolving and predecessor-separated on every result.
  bool verify = true;
};

/// Vertices: classes of S(w) for nonempty w; edges class(aU) -a-> class(U).
/// Input must be essential (NotEssential otherwise).
CoverResult past_set_cover(const LabelledGraph& g, const CoverOptions& opts = {});
/// Restriction of the past set cover to classes of right-rays.
CoverResult krieger_cover(const LabelledGraph& g, const CoverOptions& opts = {});
/// The irreducible component of the Krieger cover presenting the whole shift.
/// Throws NotIrreducible if there is none.
CoverResult fischer_cover(const LabelledGraph& g, const CoverOptions& opts = {});

/// Vertices of a Krieger cover whose class is not the union of the classes
/// strictly below it.
VertexSet non_decomposable_vertices(const CoverResult& krieger);
/// Krieger vertices from which a non-decomposable vertex is reachable.
CoverResult generalized_fischer_cover(const CoverResult& krieger);
CoverResult generalized_fischer_cover(const LabelledGraph& g, const CoverOptions& opts = {});

/// layer(P) = least k such that k foundation classes have union P. Both
/// covers must share their base graph (GraphMismatch otherwise). Throws
/// NoCoverExists when some class is not such a union.
CoverResult layers(const CoverResult& cover, const CoverResult& foundation);

/// Trim of the cover graph with annotations kept. Throws EmptyAfterTrim.
CoverResult maximal_essential_subgraph(const CoverResult& cover);

struct ConditionStar {
  bool holds = false;
  std::optional<PredecessorClassKey> witness;
  /// Vertex name of the witness in the cover that has it.
  std::string witness_name;
  /// True when the witness is a Krieger class missing from the essential
  /// part of the past set cover, false for the other direction.
  bool witness_in_krieger = false;
};

/// Compares the class sets of the Krieger cover and of the maximal essential
/// subgraph of the past set cover.
ConditionStar condition_star(const LabelledGraph& g, const CoverOptions& opts = {});

/// Over the Fischer cover F: vertices are the sets S(x+) of right-rays of F
/// plus all singletons, edges aV -a-> V, layer(V) = |V|.
CoverResult multiplicity_set_cover(const LabelledGraph& g, const CoverOptions& opts = {});
/// Multiplicity cover without its singleton layer, trimmed. nullopt when
/// nothing essential remains (finite type shifts).
std::optional<LabelledGraph> derived_shift_presentation(const LabelledGraph& g,
                                                        const CoverOptions& opts = {});
std::optional<LabelledGraph> derived_shift_presentation(const CoverResult& multiplicity);

/// "{a,b}" from member names in declaration order.
std::string set_name(const LabelledGraph& g, const VertexSet& s);

}  // namespace soficshift
