#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "soficshift/graph.hpp"
#include "soficshift/language.hpp"

namespace soficshift {

inline constexpr std::size_t kDefaultMonoidCap = 1000000;

/// The sets S(w) = wE^0 reachable from E^0 by prepending symbols.
struct SubsetAutomaton {
  std::size_t alphabet_size = 0;
  /// subsets[0] is E^0 with the empty witness.
  std::vector<VertexSet> subsets;
  /// Shortest w with S(w) = subsets[i]; ties broken by symbol order of the
  /// first letter read (the last letter of w).
  std::vector<Word> witness;
  /// transitions[i * alphabet_size + a] = index of a * subsets[i], or -1.
  std::vector<std::int32_t> transitions;

  std::size_t size() const noexcept { return subsets.size(); }
  std::int32_t next(std::size_t i, Symbol a) const { return transitions[i * alphabet_size + a]; }
  /// Index of the set, or -1.
  std::int32_t find(const VertexSet& s) const;
};

/// Throws StateCapExceeded past `cap` subsets.
SubsetAutomaton reachable_subsets(const LabelledGraph& g, std::size_t cap = kDefaultSubsetCap);

/// Boolean n x n matrix stored as bitset rows.
class TransitionRelation {
 public:
  TransitionRelation() = default;
  explicit TransitionRelation(std::size_t n);

  static TransitionRelation identity(std::size_t n);
  /// (u, v) set iff u -a-> v.
  static TransitionRelation generator(const LabelledGraph& g, Symbol a);
  static TransitionRelation of_word(const LabelledGraph& g, std::span<const Symbol> w);

  std::size_t size() const noexcept { return n_; }
  bool test(VertexId u, VertexId v) const;
  void set(VertexId u, VertexId v);
  bool empty() const noexcept;

  /// Relational product: (u, w) iff (u, v) in this and (v, w) in rhs.
  TransitionRelation compose(const TransitionRelation& rhs) const;
  /// Vertices with a nonempty row.
  VertexSet domain(const LabelledGraph& g) const;
  /// Row u as a set over g.
  VertexSet row(const LabelledGraph& g, VertexId u) const;

  std::size_t hash() const noexcept;
  friend bool operator==(const TransitionRelation& a, const TransitionRelation& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;  // words per row
  std::vector<std::uint64_t> bits_;
};

}  // namespace soficshift

template <>
struct std::hash<soficshift::TransitionRelation> {
  std::size_t operator()(const soficshift::TransitionRelation& r) const noexcept {
    return r.hash();
  }
};

namespace soficshift {

/// Relations rho(w) for all words w, found breadth-first from the identity by
/// right multiplication with generators. The empty relation is excluded.
struct MonoidExploration {
  std::size_t alphabet_size = 0;
  /// relations[0] is the identity.
  std::vector<TransitionRelation> relations;
  std::vector<Word> words;
  /// transitions[i * alphabet_size + a], -1 for the empty relation.
  std::vector<std::int32_t> transitions;
  /// Index into `keys` of the class of each relation's domain.
  std::vector<std::uint32_t> domain_class;
  /// Distinct domain classes in order of first appearance.
  std::vector<PredecessorClassKey> keys;
  std::vector<VertexSet> key_representative;

  std::size_t size() const noexcept { return relations.size(); }
  std::int32_t next(std::size_t i, Symbol a) const { return transitions[i * alphabet_size + a]; }
};

MonoidExploration relation_monoid(const LabelledGraph& g, const LanguageIndex& index,
                                  std::size_t cap = kDefaultMonoidCap);
MonoidExploration relation_monoid(const LabelledGraph& g, std::size_t cap = kDefaultMonoidCap);

/// A predecessor class realized by a right-ray, with a periodic witness ray
/// prefix * period^omega.
struct KriegerClass {
  PredecessorClassKey key;
  Word prefix;
  Word period;
  /// Domain of a relation on the witnessing cycle.
  VertexSet domain;
};

/// Generic form of the ray detection: `label[i]` partitions the relations,
/// and a label is kept iff the relations carrying it contain a cycle of the
/// exploration. Returns (label, relation index on the cycle, period) sorted by
/// relation index.
struct StableLabel {
  std::uint32_t label = 0;
  std::size_t relation = 0;
  Word period;
};
std::vector<StableLabel> stable_labels(const MonoidExploration& m,
                                       const std::vector<std::uint32_t>& label);

/// Classes of P(x+) over all right-rays x+, ordered by first appearance in
/// the exploration.
std::vector<KriegerClass> krieger_classes(const LabelledGraph& g, const LanguageIndex& index,
                                          std::size_t monoid_cap = kDefaultMonoidCap);
std::vector<PredecessorClassKey> krieger_class_keys(const LabelledGraph& g,
                                                    std::size_t monoid_cap = kDefaultMonoidCap);

/// Class of the periodic ray w u u u ...; iterates rho(w) rho(u)^k until the
/// relation repeats. Throws InvalidRay if u is empty or the ray is not in the
/// shift.
PredecessorClassKey periodic_ray_class(const LabelledGraph& g, std::span<const Symbol> w,
                                       std::span<const Symbol> u);
/// Domain S(w u^k) once the relation sequence has entered its cycle.
VertexSet periodic_ray_domain(const LabelledGraph& g, std::span<const Symbol> w,
                              std::span<const Symbol> u);

}  // namespace soficshift
