#include "helpers.hpp"
#include "oracles.hpp"
#include "seed.hpp"
#include "soficshift/constructions.hpp"
#include "soficshift/covers.hpp"
#include "soficshift/graph_ops.hpp"
#include "soficshift/invariants.hpp"

namespace soficshift {
namespace {

TEST(RootedDag, Validation) {
  EXPECT_ERROR(InvalidDag, RootedDag({"r", "x"}, 0, {{0, 1}, {1, 0}}));
  EXPECT_ERROR(InvalidDag, RootedDag({"r", "x"}, 0, {}));
  EXPECT_ERROR(InvalidDag, RootedDag({"r"}, 3, {}));
  EXPECT_ERROR(InvalidDag, RootedDag({"r", "r"}, 0, {{0, 1}}));
  const RootedDag d({"r", "x", "y"}, 0, {{0, 1}, {1, 2}});
  EXPECT_EQ(d.depths(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(d.is_sink(2));
  EXPECT_FALSE(d.is_sink(0));
}

TEST(RootedDag, TextFormat) {
  const auto d = parse_dag("# comment\nroot r\narc r x\narc x y\nvertex y\n");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.names()[d.root()], "r");
  const auto again = parse_dag(serialize_dag(d));
  EXPECT_EQ(again.names(), d.names());
  EXPECT_EQ(again.arcs(), d.arcs());
  EXPECT_ERROR(Parse, parse_dag("arc r x\n"));
  EXPECT_ERROR(Parse, parse_dag("root r\nroot s\n"));
  EXPECT_ERROR(Parse, parse_dag("root r\nedge r x\n"));
}

TEST(RootedDag, TransitiveClosure) {
  const auto chain = transitive_closure_dag(parse_dag("root r\narc r a\narc a b\n"));
  EXPECT_EQ(chain.arcs().size(), 3u);
  EXPECT_TRUE(chain.digraph().has_arc(0, 2));
  EXPECT_EQ(transitive_closure_dag(example_dag()).arcs(), example_dag().arcs());
  const auto anti = parse_dag("root r\narc r a\narc r b\n");
  EXPECT_EQ(transitive_closure_dag(anti).arcs(), anti.arcs());
}

TEST(RealizePcg, ExampleMatchesDrawnFischerCover) {
  const auto g = realize_pcg(example_dag(), ReturnEdges::AllNonRoot);
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_TRUE(labelled_isomorphic(g, fixture("ex52_fischer")));
  const auto p = predicates(g);
  EXPECT_TRUE(p.left_resolving);
  EXPECT_TRUE(p.right_resolving);
  EXPECT_TRUE(p.irreducible_graph);
  for (const char* v : {"r_1", "x_1", "x_2", "y_1", "y_2", "z_1", "z_4"}) {
    EXPECT_TRUE(g.find_vertex(v).has_value()) << v;
  }
}

TEST(RealizePcg, SingleVertex) {
  const RootedDag single({"r"}, 0, {});
  for (auto mode : {ReturnEdges::SinksOnly, ReturnEdges::AllNonRoot}) {
    const auto g = realize_pcg(single, mode);
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.alphabet().symbols(), (std::vector<std::string>{"a_r", "ret_r_1"}));
  }
  const auto i = realize_ideal_lattice(single);
  EXPECT_EQ(i.alphabet().symbols(), (std::vector<std::string>{"a_r", "a_r'", "ret_r_1"}));
}

TEST(RealizePcg, Chain) {
  const auto g = realize_pcg(parse_dag("root r\narc r a\n"));
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"r_1", "a_1", "a_2"}));
  for (const char* copy : {"a_1", "a_2"}) {
    const VertexId v = g.vertex(copy);
    EXPECT_TRUE(g.has_edge(v, *g.alphabet().find("a_a"), v));
    const auto ret = g.alphabet().find(std::string("ret_") + copy);
    ASSERT_TRUE(ret.has_value());
    EXPECT_TRUE(g.has_edge(v, *ret, g.vertex("r_1")));
  }
  EXPECT_TRUE(g.alphabet().find("a_{r,a}^1").has_value());
  EXPECT_TRUE(g.alphabet().find("a_{r,a}^2").has_value());
}

TEST(RealizePcg, ReturnModesDifferOnlyInInnerReturns) {
  const auto sinks = realize_pcg(example_dag(), ReturnEdges::SinksOnly);
  const auto all = realize_pcg(example_dag(), ReturnEdges::AllNonRoot);
  EXPECT_EQ(sinks.vertex_count(), all.vertex_count());
  EXPECT_LT(sinks.edge_count(), all.edge_count());
}

void expect_round_trip(const RootedDag& dag, ReturnEdges mode) {
  const auto g = realize_pcg(dag, mode);
  ASSERT_TRUE(is_irreducible_graph(g));
  ASSERT_TRUE(is_left_resolving(g));
  const auto p = pcg_invariant(g);
  ASSERT_TRUE(dag_isomorphic(p.closure, transitive_closure_dag(dag).digraph())) << serialize_dag(dag);
  ASSERT_TRUE(p.root.has_value());
}

TEST(RealizePcg, RoundTripOnRandomDags) {
  auto rng = testing::seeded_rng("realize_round_trip");
  for (int i = 0; i < 20; ++i) {
    const auto dag = random_rooted_dag(rng, 4);
    expect_round_trip(dag, ReturnEdges::SinksOnly);
    expect_round_trip(dag, ReturnEdges::AllNonRoot);
  }
}

TEST(RealizeIdealLattice, Examples) {
  const auto chain = krieger_cover(realize_ideal_lattice(parse_dag("root r\narc r x\n")));
  EXPECT_TRUE(condition_K(chain.graph));
  EXPECT_EQ(hereditary_saturated_subsets(chain.graph).size(), 3u);

  const auto ex = pcg_invariant(realize_ideal_lattice(example_dag()));
  EXPECT_TRUE(dag_isomorphic(ex.closure, example_dag().digraph()));
}

TEST(RandomRootedDag, AlwaysValid) {
  auto rng = testing::seeded_rng("random_dags");
  for (int i = 0; i < 200; ++i) {
    const auto d = random_rooted_dag(rng, 5);
    ASSERT_GE(d.size(), 1u);
    ASSERT_LE(d.size(), 5u);
    ASSERT_TRUE(d.digraph().acyclic());
    const auto c = d.digraph().closure();
    for (std::uint32_t v = 0; v < d.size(); ++v) {
      if (v != d.root()) ASSERT_TRUE(c.has_arc(d.root(), v));
    }
  }
}

TEST(ChargeConstrained, Structure) {
  const auto g = charge_constrained(3);
  EXPECT_TRUE(labelled_isomorphic(g, fixture("3cc")));
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"0", "1", "2", "3"}));
  EXPECT_TRUE(g.has_edge(0, *g.alphabet().find("+"), 1));
  EXPECT_TRUE(g.has_edge(3, *g.alphabet().find("-"), 2));
}

}  // namespace
}  // namespace soficshift
