// One line per acceptance criterion: PASS/FAIL, elapsed time and the limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cover_checks.hpp"
#include "oracles.hpp"
#include "seed.hpp"
#include "soficshift/constructions.hpp"
#include "soficshift/covers.hpp"
#include "soficshift/error.hpp"
#include "soficshift/graph_io.hpp"
#include "soficshift/graph_ops.hpp"
#include "soficshift/invariants.hpp"
#include "soficshift/subset_dynamics.hpp"

namespace soficshift {
namespace {

using Histogram = std::map<std::size_t, std::size_t>;

/// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream s;
    s << what << ": got " << show(got) << ", want " << show(want);
    failures_.push_back(s.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, Histogram>) {
      std::string out = "{";
      for (const auto& [k, n] : v) out += (out.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(n);
      return out + "}";
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      return "<value>";
    }
  }
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

CoverResult layered_krieger(const LabelledGraph& g) {
  const auto k = krieger_cover(g);
  return layers(k, generalized_fischer_cover(k));
}

void three_charge(Check& c) {
  const auto g = charge_constrained(3);
  const auto k = layered_krieger(g);
  c.expect_eq(k.graph.vertex_count(), std::size_t{9}, "Krieger vertices");
  c.expect_eq(k.layer_histogram(), Histogram{{1, 4}, {2, 3}, {3, 2}}, "layers");
  // The charge presentations already use the +/- symbols of the cover, so
  // the relabelling is the identity.
  c.expect(labelled_isomorphic(k.layer_subgraph(2), fischer_cover(charge_constrained(2)).graph),
           "layer 2 is not the Fischer cover of the 2-charge shift");
  c.expect(labelled_isomorphic(k.layer_subgraph(3), fischer_cover(charge_constrained(1)).graph),
           "layer 3 is not the Fischer cover of the 1-charge shift");
}

void example_round_trip(Check& c) {
  const auto g = realize_pcg(example_dag(), ReturnEdges::AllNonRoot);
  c.expect_eq(g.vertex_count(), std::size_t{9}, "realized vertices");
  c.expect(labelled_isomorphic(g, fixture("ex52_fischer")), "realized graph differs from the drawn Fischer cover");
  const auto k = krieger_cover(g);
  c.expect_eq(k.graph.vertex_count(), std::size_t{12}, "Krieger vertices");
  std::set<std::string> looped;
  for (const auto& v : k.vertices) {
    if (v.flags.in_fischer_top || v.ray_period.size() != 1) continue;
    looped.insert(g.alphabet().symbols()[v.ray_period[0]]);
  }
  c.expect_eq(looped.size(), std::size_t{3}, "extra looped Krieger vertices");
  c.expect(looped == std::set<std::string>{"a_x", "a_y", "a_z"}, "extra vertices are not the a_x, a_y, a_z rays");
  const auto p = proper_communication_graph(k.graph);
  c.expect(dag_isomorphic(p.closure, example_dag().digraph()), "PCG is not the input DAG");
}

void random_round_trips(Check& c) {
  auto rng = testing::seeded_rng("acceptance_random_dags");
  for (int i = 0; i < 50; ++i) {
    const auto dag = random_rooted_dag(rng, 5);
    const auto closure = transitive_closure_dag(dag).digraph();
    for (auto mode : {ReturnEdges::SinksOnly, ReturnEdges::AllNonRoot}) {
      const auto p = pcg_invariant(realize_pcg(dag, mode));
      if (!dag_isomorphic(p.closure, closure)) {
        c.expect(false, "round trip fails for\n" + serialize_dag(dag));
        return;
      }
    }
  }
}

void gfc_justifying(Check& c) {
  const auto g = fixture("gfc_justifying");
  const auto k = krieger_cover(g);
  c.expect(labelled_isomorphic(k.graph, g), "Krieger cover differs from the fixture");
  const auto nd = non_decomposable_vertices(k);
  c.expect_eq(k.graph.vertex_count() - nd.count(), std::size_t{1}, "decomposable vertices");
  for (VertexId v = 0; v < k.graph.vertex_count(); ++v) {
    if (!nd.test(v)) c.expect(k.vertices[v].representative == g.vertex_set({"P"}), "decomposable vertex is not P");
  }
  c.expect_eq(generalized_fischer_cover(k).graph.vertex_count(), std::size_t{9}, "GFC vertices");
  auto keep = g.all_vertices();
  keep.reset(g.vertex("P"));
  const auto without = induced_subgraph(g, keep);
  c.expect(!shift_language_equal(g, without), "removing P keeps the language");
  const std::vector<std::string> dbj{"d", "b", "j"};
  c.expect(word_presentable(g, dbj) && !word_presentable(without, dbj), "dbj does not witness the difference");
}

void two_invariants(Check& c) {
  const auto left = pcg_invariant(fixture("2inv_left_fischer"));
  c.expect_eq(left.node_count(), std::size_t{1}, "left PCG nodes");
  c.expect_eq(left.arc_count(), std::size_t{0}, "left PCG arcs");
  const auto right = pcg_invariant(transpose(fixture("2inv_right_fischer")));
  c.expect_eq(right.node_count(), std::size_t{2}, "right PCG nodes");
  c.expect_eq(right.arc_count(), std::size_t{1}, "right PCG arcs");
}

void even_shift_oracle(Check& c) {
  const auto g = even_shift();
  // Brute-force values: ray classes with |w|, |u| <= 4, grouped by the pair
  // oracle, and the exhaustive hereditary subset scan of the Krieger cover.
  std::vector<oracle::Mask> classes;
  for (const auto m : oracle::ray_domains(g, 4)) {
    bool fresh = true;
    for (const auto r : classes) {
      const auto rel = oracle::pred_relation(g, m, r);
      if (rel.u_in_v && rel.v_in_u) fresh = false;
    }
    if (fresh) classes.push_back(m);
  }
  c.expect_eq(classes.size(), std::size_t{3}, "oracle ray classes");

  const auto k = layered_krieger(g);
  c.expect_eq(k.graph.vertex_count(), std::size_t{3}, "Krieger vertices");
  c.expect_eq(fischer_cover(g).graph.vertex_count(), std::size_t{2}, "Fischer vertices");
  c.expect_eq(k.layer_histogram(), Histogram{{1, 2}, {2, 1}}, "layers");
  c.expect(condition_star(g).holds, "condition (*) fails");

  const auto scan = oracle::hereditary_saturated(k.graph);
  c.expect_eq(scan.size(), std::size_t{3}, "oracle ideal count");
  bool chain = true;
  for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
    for (std::size_t j = i + 1; j < scan.size(); ++j) {
      if ((scan[i] & scan[j]) != scan[i] && (scan[i] & scan[j]) != scan[j]) chain = false;
    }
  }
  c.expect(chain, "oracle ideals are not a chain");
  const auto lattice = hereditary_saturated_subsets(k.graph);
  c.expect_eq(lattice.size(), std::size_t{3}, "ideal count");
  c.expect(dag_isomorphic(lattice.hasse, Digraph::make(3, {{0, 1}, {1, 2}})), "ideal lattice is not a 3-chain");
}

void cover_invariants(Check& c) {
  for (const auto& name : fixture_names()) {
    for (const auto& v : testing::cover_invariant_violations(fixture(name))) c.expect(false, name + ": " + v);
  }
  const auto pair = fixture("even_pair");
  const auto second = relabel(even_shift(), {{"0", "0'"}, {"1", "1'"}});
  const auto expected = disjoint_union(generalized_fischer_cover(even_shift()).graph,
                                       generalized_fischer_cover(second).graph);
  c.expect(labelled_isomorphic(generalized_fischer_cover(pair).graph, expected),
           "GFC of the disjoint union is not the union of the GFCs");
}

void flow_invariance(Check& c) {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    for (const auto& a : g.alphabet().symbols()) {
      c.expect(flow_expand_check(g, a), name + ": expanding " + a + " changes the PCG");
    }
  }
}

void oracle_equivalence(Check& c) {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    std::set<PredecessorClassKey> from_rays;
    for (const auto& [mask, ray] : oracle::ray_witnesses(g, 6)) {
      const auto key = periodic_ray_class(g, ray.prefix, ray.period);
      c.expect(oracle::to_mask(periodic_ray_domain(g, ray.prefix, ray.period)) == mask,
               name + ": ray domain disagrees with the fixed point");
      from_rays.insert(key);
    }
    const auto keys = krieger_class_keys(g);
    c.expect(std::set<PredecessorClassKey>(keys.begin(), keys.end()) == from_rays,
             name + ": Krieger classes differ from the enumerated ray classes");
  }
}

}  // namespace
}  // namespace soficshift

int main(int argc, char** argv) {
  using namespace soficshift;
  if (!testing::consume_seed_flag(argc, argv) || argc > 1) {
    std::fprintf(stderr, "usage: %s [--seed=N]\n", argv[0]);
    return 2;
  }
  const std::vector<Criterion> criteria{
      {1, "3-charge Krieger cover and layers", 1.0, three_charge},
      {2, "constructed example round trip", 5.0, example_round_trip},
      {3, "random DAG round trips (50 x 2 modes)", 30.0, random_round_trips},
      {4, "gfc_justifying fixture", 2.0, gfc_justifying},
      {5, "left and right PCG of the two-invariants example", 2.0, two_invariants},
      {6, "even shift against brute-force oracles", 1.0, even_shift_oracle},
      {7, "cover invariants on every fixture", 20.0, cover_invariants},
      {8, "PCG invariant under symbol expansion", 10.0, flow_invariance},
      {9, "Krieger classes equal enumerated ray classes", 20.0, oracle_equivalence},
  };
  std::printf("seed: %llu\n", static_cast<unsigned long long>(testing::test_seed()));
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > crit.limit_seconds) {
      check.expect(false, "took " + std::to_string(seconds) + " s");
    }
    const bool ok = check.failures().empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.title,
                seconds, crit.limit_seconds);
    for (const auto& f : check.failures()) std::printf("     %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
