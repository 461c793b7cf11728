#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace soficshift {

using VertexId = std::uint32_t;

/// Bitmask over the vertex list of one particular LabelledGraph.
///
/// A set remembers the identity token of the graph it was created for; mixing
/// sets from different graphs throws GraphMismatch. Sets built with owner 0
/// are unbound and combine with anything of the same universe size.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::uint64_t owner, std::size_t universe);

  std::uint64_t owner() const noexcept { return owner_; }
  std::size_t universe() const noexcept { return universe_; }

  bool test(VertexId v) const;
  void set(VertexId v);
  void reset(VertexId v);
  void clear() noexcept;
  void fill() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool any() const noexcept { return !empty(); }
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic on (cardinality, least differing member); used for
  /// deterministic ordering only.
  friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept;

  std::vector<VertexId> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = __builtin_ctzll(bits);
        f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void check_compatible(const VertexSet& other) const;

  std::uint64_t owner_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace soficshift

template <>
struct std::hash<soficshift::VertexSet> {
  std::size_t operator()(const soficshift::VertexSet& s) const noexcept { return s.hash(); }
};
