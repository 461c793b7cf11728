#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "soficshift/graph.hpp"

namespace soficshift {

inline constexpr std::size_t kDefaultSubsetCap = 100000;

/// Partial DFA in which every state accepts; a missing transition (-1) leads
/// to the implicit dead state.
struct DeterministicAcceptor {
  std::size_t alphabet_size = 0;
  std::size_t state_count = 0;
  std::int32_t start = 0;
  /// transitions[state * alphabet_size + symbol]
  std::vector<std::int32_t> transitions;

  std::int32_t next(std::int32_t state, Symbol a) const {
    return transitions[static_cast<std::size_t>(state) * alphabet_size + a];
  }
  /// Runs the word from the start state, first symbol first.
  bool accepts(std::span<const Symbol> word) const;
};

/// Hopcroft partition refinement, then renumbering in breadth-first order
/// over the symbols. Two acceptors of the same language come out identical.
DeterministicAcceptor minimize(const DeterministicAcceptor& dfa);
/// Drops unreachable states and renumbers breadth-first.
DeterministicAcceptor canonicalize(const DeterministicAcceptor& dfa);

/// Canonical minimal acceptor of the reversed predecessor language of a
/// vertex set. Equal keys mean equal predecessor languages.
class PredecessorClassKey {
 public:
  PredecessorClassKey() = default;
  explicit PredecessorClassKey(DeterministicAcceptor canonical);

  const DeterministicAcceptor& acceptor() const noexcept { return acceptor_; }
  std::uint64_t digest() const noexcept { return digest_; }
  /// 16 hex digits of digest().
  std::string hex() const;

  friend bool operator==(const PredecessorClassKey& a, const PredecessorClassKey& b) noexcept {
    return a.digest_ == b.digest_ && a.acceptor_.alphabet_size == b.acceptor_.alphabet_size &&
           a.acceptor_.transitions == b.acceptor_.transitions;
  }
  friend bool operator<(const PredecessorClassKey& a, const PredecessorClassKey& b) noexcept;

 private:
  DeterministicAcceptor acceptor_;
  std::uint64_t digest_ = 0;
};

/// Acceptor of {reverse(w) : some path labelled w ends in U}. Reading a
/// symbol a moves from T to aT. Minimized. Throws StateCapExceeded.
DeterministicAcceptor predecessor_acceptor(const LabelledGraph& g, const VertexSet& u,
                                           std::size_t cap = kDefaultSubsetCap);
PredecessorClassKey class_key(const LabelledGraph& g, const VertexSet& u,
                              std::size_t cap = kDefaultSubsetCap);
bool pred_equal(const LabelledGraph& g, const VertexSet& u, const VertexSet& v,
                std::size_t cap = kDefaultSubsetCap);
/// Predecessor language of u contained in that of v.
bool pred_subset(const LabelledGraph& g, const VertexSet& u, const VertexSet& v,
                 std::size_t cap = kDefaultSubsetCap);
/// Inclusion test on two keys built over the same alphabet.
bool key_subset(const PredecessorClassKey& a, const PredecessorClassKey& b);

/// True iff some path is labelled w.
bool word_presentable(const LabelledGraph& g, std::span<const Symbol> w);
bool word_presentable(const LabelledGraph& g, std::span<const std::string> w);

/// Shortest word (by length, then symbol order) presentable in exactly one of
/// the graphs; nullopt when the factor languages agree.
std::optional<std::vector<std::string>> language_difference(const LabelledGraph& g1,
                                                            const LabelledGraph& g2,
                                                            std::size_t cap = kDefaultSubsetCap);
bool shift_language_equal(const LabelledGraph& g1, const LabelledGraph& g2,
                          std::size_t cap = kDefaultSubsetCap);

/// Memo table of class keys for one graph. Safe for concurrent use; every
/// query returns what the uncached function would.
class LanguageIndex {
 public:
  explicit LanguageIndex(const LabelledGraph& g, std::size_t cap = kDefaultSubsetCap);

  const LabelledGraph& graph() const noexcept { return *graph_; }
  std::size_t cap() const noexcept { return cap_; }

  PredecessorClassKey key(const VertexSet& u) const;
  bool equal(const VertexSet& u, const VertexSet& v) const { return key(u) == key(v); }
  bool subset(const VertexSet& u, const VertexSet& v) const { return key_subset(key(u), key(v)); }
  std::size_t cached() const;

 private:
  const LabelledGraph* graph_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<VertexSet, PredecessorClassKey> keys_;
};

}  // namespace soficshift

template <>
struct std::hash<soficshift::PredecessorClassKey> {
  std::size_t operator()(const soficshift::PredecessorClassKey& k) const noexcept {
    return static_cast<std::size_t>(k.digest());
  }
};
