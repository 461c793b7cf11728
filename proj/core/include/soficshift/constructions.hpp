#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "soficshift/graph.hpp"
#include "soficshift/invariants.hpp"

namespace soficshift {

/// Finite acyclic digraph whose root reaches every vertex.
class RootedDag {
 public:
  /// Throws InvalidDag unless acyclic with `root` reaching everything.
  RootedDag(std::vector<std::string> names, std::uint32_t root, std::vector<Arc> arcs);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::uint32_t root() const noexcept { return root_; }
  const Digraph& digraph() const noexcept { return graph_; }
  const std::vector<Arc>& arcs() const noexcept { return graph_.arcs; }
  bool is_sink(std::uint32_t v) const;
  /// Length of the longest path from the root.
  std::vector<std::size_t> depths() const;

 private:
  std::vector<std::string> names_;
  std::uint32_t root_ = 0;
  Digraph graph_;
};

/// `root <name>` once, then `arc <src> <dst>` lines; '#' comments.
RootedDag parse_dag(std::string_view text);
std::string serialize_dag(const RootedDag& dag);

RootedDag transitive_closure_dag(const RootedDag& dag);

enum class ReturnEdges {
  /// Return edges to r_1 from every copy of every sink.
  SinksOnly,
  /// From every non-root copy, plus the root copy when the root is a sink.
  AllNonRoot,
};

/// Irreducible left- and right-resolving presentation whose Krieger cover has
/// the transitive closure of `dag` as proper communication graph. Copies are
/// named v_1..v_n(v) with n(v) = 2^depth(v); loops a_v; arc labels
/// a_{u,v}^k; return labels ret_v_i.
LabelledGraph realize_pcg(const RootedDag& dag, ReturnEdges mode = ReturnEdges::AllNonRoot);
/// Same with a second loop a_v' at every copy.
LabelledGraph realize_ideal_lattice(const RootedDag& dag, ReturnEdges mode = ReturnEdges::SinksOnly);

/// Vertices 0..c, edges i -+-> i+1 and i -(-)-> i-1.
LabelledGraph charge_constrained(std::size_t c);
/// A -1-> A, A -0-> B, B -0-> A.
LabelledGraph even_shift();
/// r -> x, r -> y, r -> z, y -> z.
RootedDag example_dag();
/// Vertex 0 is the root "r"; every other vertex gets at least one arc from
/// an earlier vertex.
RootedDag random_rooted_dag(std::mt19937_64& rng, std::size_t max_vertices = 5);

LabelledGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace soficshift
