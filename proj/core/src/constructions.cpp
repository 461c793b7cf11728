#include "soficshift/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "soficshift/error.hpp"
#include "soficshift/graph_io.hpp"
#include "soficshift/graph_ops.hpp"

namespace soficshift {

RootedDag::RootedDag(std::vector<std::string> names, std::uint32_t root, std::vector<Arc> arcs)
    : names_(std::move(names)), root_(root) {
  if (names_.empty()) fail(ErrorCode::InvalidDag, "DAG has no vertices");
  if (root_ >= names_.size()) fail(ErrorCode::InvalidDag, "root out of range");
  for (const auto& n : names_) {
    if (!is_valid_token(n)) fail(ErrorCode::InvalidDag, "invalid vertex name '" + n + "'");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) fail(ErrorCode::InvalidDag, "duplicate vertex name '" + n + "'");
  }
  for (const auto& [u, v] : arcs) {
    if (u >= names_.size() || v >= names_.size()) fail(ErrorCode::InvalidDag, "arc endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidDag, "loop at " + names_[u]);
  }
  graph_ = Digraph::make(names_.size(), std::move(arcs));
  if (!graph_.acyclic()) fail(ErrorCode::InvalidDag, "graph contains a circuit");
  const Digraph c = graph_.closure();
  for (std::uint32_t v = 0; v < names_.size(); ++v) {
    if (v != root_ && !c.has_arc(root_, v)) {
      fail(ErrorCode::InvalidDag, "root does not reach " + names_[v]);
    }
  }
}

bool RootedDag::is_sink(std::uint32_t v) const {
  return std::none_of(graph_.arcs.begin(), graph_.arcs.end(),
                      [&](const Arc& a) { return a.first == v; });
}

std::vector<std::size_t> RootedDag::depths() const {
  // Arcs only go forward in a topological order; relax until stable.
  std::vector<std::size_t> depth(names_.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : graph_.arcs) {
      if (depth[v] < depth[u] + 1) {
        depth[v] = depth[u] + 1;
        changed = true;
      }
    }
  }
  return depth;
}

RootedDag parse_dag(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> index;
  std::optional<std::uint32_t> root;
  std::vector<Arc> arcs;
  auto vertex = [&](const std::string& n) {
    auto [it, inserted] = index.emplace(n, static_cast<std::uint32_t>(names.size()));
    if (inserted) names.push_back(n);
    return it->second;
  };
  for (const auto& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    const auto where = "line " + std::to_string(line.number) + ": ";
    if (t[0] == "root" && t.size() == 2) {
      if (root) fail(ErrorCode::Parse, where + "second 'root' line");
      root = vertex(t[1]);
    } else if (t[0] == "arc" && t.size() == 3) {
      const auto u = vertex(t[1]);
      arcs.emplace_back(u, vertex(t[2]));
    } else if (t[0] == "vertex" && t.size() == 2) {
      vertex(t[1]);
    } else {
      fail(ErrorCode::Parse, where + "expected 'root <name>' or 'arc <src> <dst>'");
    }
  }
  if (!root) fail(ErrorCode::Parse, "missing 'root' line");
  return RootedDag(std::move(names), *root, std::move(arcs));
}

std::string serialize_dag(const RootedDag& dag) {
  std::string out = "root " + dag.names()[dag.root()] + "\n";
  for (std::uint32_t v = 0; v < dag.size(); ++v) {
    if (v != dag.root()) out += "vertex " + dag.names()[v] + "\n";
  }
  for (const auto& [u, v] : dag.arcs()) out += "arc " + dag.names()[u] + " " + dag.names()[v] + "\n";
  return out;
}

RootedDag transitive_closure_dag(const RootedDag& dag) {
  return RootedDag(dag.names(), dag.root(), dag.digraph().closure().arcs);
}

namespace {

LabelledGraph realize(const RootedDag& input, ReturnEdges mode, bool doubled) {
  const RootedDag dag = transitive_closure_dag(input);
  const auto depth = dag.depths();
  const auto& names = dag.names();
  std::vector<std::size_t> copies(dag.size());
  for (std::size_t v = 0; v < dag.size(); ++v) {
    if (depth[v] >= 20) fail(ErrorCode::CapExceeded, "DAG too deep to realize");
    copies[v] = std::size_t{1} << depth[v];
  }
  auto copy = [&](std::size_t v, std::size_t i) { return names[v] + "_" + std::to_string(i); };

  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < dag.size(); ++v) {
    for (std::size_t i = 1; i <= copies[v]; ++i) vertices.push_back(copy(v, i));
  }
  std::vector<NamedEdge> edges;
  for (std::size_t v = 0; v < dag.size(); ++v) {
    for (std::size_t i = 1; i <= copies[v]; ++i) {
      edges.push_back({copy(v, i), "a_" + names[v], copy(v, i)});
      if (doubled) edges.push_back({copy(v, i), "a_" + names[v] + "'", copy(v, i)});
    }
  }
  for (const auto& [u, v] : dag.arcs()) {
    const std::size_t ratio = copies[v] / copies[u];
    for (std::size_t i = 1; i <= copies[u]; ++i) {
      for (std::size_t k = 1; k <= ratio; ++k) {
        edges.push_back({copy(u, i), "a_{" + names[u] + "," + names[v] + "}^" + std::to_string(k),
                         copy(v, (i - 1) * ratio + k)});
      }
    }
  }
  const std::string root_copy = copy(dag.root(), 1);
  for (std::uint32_t v = 0; v < dag.size(); ++v) {
    const bool returns = dag.is_sink(v) || (mode == ReturnEdges::AllNonRoot && v != dag.root());
    if (!returns) continue;
    for (std::size_t i = 1; i <= copies[v]; ++i) {
      edges.push_back({copy(v, i), "ret_" + names[v] + "_" + std::to_string(i), root_copy});
    }
  }
  return LabelledGraph::from_named(doubled ? "ideal" : "pcg", std::move(vertices), edges);
}

}  // namespace

LabelledGraph realize_pcg(const RootedDag& dag, ReturnEdges mode) {
  return realize(dag, mode, false);
}

LabelledGraph realize_ideal_lattice(const RootedDag& dag, ReturnEdges mode) {
  return realize(dag, mode, true);
}

LabelledGraph charge_constrained(std::size_t c) {
  if (c == 0) fail(ErrorCode::InvalidArgument, "charge bound must be positive");
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i <= c; ++i) vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i < c; ++i) {
    edges.push_back({vertices[i], "+", vertices[i + 1]});
    edges.push_back({vertices[i + 1], "-", vertices[i]});
  }
  return LabelledGraph::from_named("charge" + std::to_string(c), std::move(vertices), edges);
}

LabelledGraph even_shift() {
  return LabelledGraph::from_named("even", {"A", "B"},
                                   {{"A", "1", "A"}, {"A", "0", "B"}, {"B", "0", "A"}});
}

RootedDag example_dag() {
  return RootedDag({"r", "x", "y", "z"}, 0, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
}

RootedDag random_rooted_dag(std::mt19937_64& rng, std::size_t max_vertices) {
  if (max_vertices == 0) fail(ErrorCode::InvalidArgument, "DAG needs at least one vertex");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::vector<std::string> names{"r"};
  for (std::size_t j = 1; j < n; ++j) names.push_back("v" + std::to_string(j));
  std::vector<Arc> arcs;
  for (std::uint32_t j = 1; j < n; ++j) {
    const auto first = std::uniform_int_distribution<std::uint32_t>(0, j - 1)(rng);
    arcs.emplace_back(first, j);
    for (std::uint32_t i = 0; i < j; ++i) {
      if (i != first && std::bernoulli_distribution(0.4)(rng)) arcs.emplace_back(i, j);
    }
  }
  return RootedDag(std::move(names), 0, std::move(arcs));
}

namespace {

LabelledGraph named(std::string name, std::vector<std::string> vertices,
                    std::vector<NamedEdge> edges) {
  return LabelledGraph::from_named(std::move(name), std::move(vertices), edges);
}

const std::map<std::string, LabelledGraph (*)(), std::less<>>& fixture_table() {
  static const std::map<std::string, LabelledGraph (*)(), std::less<>> table{
      {"one_loop", [] { return named("one_loop", {"v"}, {{"v", "a", "v"}}); }},
      {"even_shift", [] { return even_shift(); }},
      {"golden_mean",
       [] { return named("golden_mean", {"A", "B"}, {{"A", "0", "A"}, {"A", "1", "B"}, {"B", "0", "A"}}); }},
      {"even_pair",
       [] {
         const LabelledGraph second = named("even'", {"A", "B"},
                                            {{"A", "1'", "A"}, {"A", "0'", "B"}, {"B", "0'", "A"}});
         const LabelledGraph u = disjoint_union(even_shift(), second);
         return LabelledGraph::from_indexed("even_pair", u.vertex_names(), u.alphabet().symbols(),
                                            {u.edges().begin(), u.edges().end()});
       }},
      {"3cc_fischer",
       [] {
         return named("3cc_fischer", {"u", "v", "w", "x"},
                      {{"u", "+", "v"}, {"v", "+", "w"}, {"w", "+", "x"},
                       {"x", "-", "w"}, {"w", "-", "v"}, {"v", "-", "u"}});
       }},
      {"3cc_krieger",
       [] {
         return named("3cc_krieger",
                      {"P(u)", "P(v)", "P(w)", "P(x)", "P(u)∪P(v)", "P(v)∪P(w)", "P(w)∪P(x)",
                       "P(u)∪P(v)∪P(w)", "P(v)∪P(w)∪P(x)"},
                      {{"P(u)", "+", "P(v)"},
                       {"P(v)", "+", "P(w)"},
                       {"P(w)", "+", "P(x)"},
                       {"P(x)", "-", "P(w)"},
                       {"P(w)", "-", "P(v)"},
                       {"P(v)", "-", "P(u)"},
                       {"P(u)", "+", "P(u)∪P(v)"},
                       {"P(x)", "-", "P(w)∪P(x)"},
                       {"P(u)∪P(v)", "+", "P(v)∪P(w)"},
                       {"P(v)∪P(w)", "+", "P(w)∪P(x)"},
                       {"P(w)∪P(x)", "-", "P(v)∪P(w)"},
                       {"P(v)∪P(w)", "-", "P(u)∪P(v)"},
                       {"P(u)∪P(v)", "+", "P(u)∪P(v)∪P(w)"},
                       {"P(w)∪P(x)", "-", "P(v)∪P(w)∪P(x)"},
                       {"P(u)∪P(v)∪P(w)", "+", "P(v)∪P(w)∪P(x)"},
                       {"P(v)∪P(w)∪P(x)", "-", "P(u)∪P(v)∪P(w)"}});
       }},
      {"gfc_justifying",
       [] {
         return named("gfc_justifying", {"O", "P", "P'", "P1", "P2", "H1", "H2", "H3", "K"},
                      {{"O", "f", "O"},   {"O", "c", "P'"},  {"O", "d", "P1"},  {"O", "e", "P2"},
                       {"P1", "b", "H1"}, {"P2", "b", "H2"}, {"H1", "a", "H1"}, {"H2", "a", "H2"},
                       {"H1", "g", "H3"}, {"H2", "h", "H3"}, {"H3", "i", "H3"}, {"O", "d", "P"},
                       {"O", "e", "P"},   {"P", "b", "P'"},  {"P'", "a", "P'"}, {"P'", "j", "K"},
                       {"K", "k", "K"}});
       }},
      {"2inv_left_fischer",
       [] {
         return named("2inv_left_fischer", {"u", "v", "w", "x", "y"},
                      {{"u", "a", "u"}, {"u", "a'", "u"}, {"v", "a", "v"}, {"v", "a'", "v"},
                       {"y", "a", "y"}, {"y", "a'", "y"}, {"w", "b", "v"}, {"x", "f", "u"},
                       {"w", "g", "x"}, {"u", "e", "w"}, {"v", "c", "w"}, {"y", "d", "w"},
                       {"x", "f", "y"}, {"w", "b", "y"}});
       }},
      {"2inv_right_fischer",
       [] {
         return named("2inv_right_fischer", {"u'", "v'", "w'", "x'"},
                      {{"u'", "a", "u'"}, {"u'", "a'", "u'"}, {"v'", "a", "v'"}, {"v'", "a'", "v'"},
                       {"w'", "b", "v'"}, {"x'", "f", "u'"}, {"w'", "g", "x'"}, {"u'", "e", "w'"},
                       {"u'", "d", "w'"}, {"v'", "d", "w'"}, {"v'", "c", "w'"}});
       }},
      {"one_synchronizing",
       [] {
         return named("one_synchronizing", {"u", "v", "w"},
                      {{"v", "c", "u"}, {"u", "a", "u"}, {"v", "a", "v"}, {"u", "d", "w"},
                       {"w", "b", "u"}, {"w", "b", "v"}});
       }},
      {"condstar_failure",
       [] {
         return named("condstar_failure", {"p", "q", "r", "s"},
                      {{"p", "a", "q"}, {"p", "b", "s"}, {"q", "b", "q"}, {"r", "a", "s"},
                       {"s", "a", "r"}, {"s", "b", "p"}});
       }},
      {"ex52_fischer",
       [] {
         std::vector<NamedEdge> edges{
             {"r_1", "a_{r,x}^1", "x_1"}, {"r_1", "a_{r,x}^2", "x_2"},
             {"r_1", "a_{r,y}^1", "y_1"}, {"r_1", "a_{r,y}^2", "y_2"},
             {"r_1", "a_{r,z}^1", "z_1"}, {"r_1", "a_{r,z}^2", "z_2"},
             {"r_1", "a_{r,z}^3", "z_3"}, {"r_1", "a_{r,z}^4", "z_4"},
             {"y_1", "a_{y,z}^1", "z_1"}, {"y_1", "a_{y,z}^2", "z_2"},
             {"y_2", "a_{y,z}^1", "z_3"}, {"y_2", "a_{y,z}^2", "z_4"},
             {"r_1", "a_r", "r_1"}};
         for (const char* v : {"x_1", "x_2", "y_1", "y_2", "z_1", "z_2", "z_3", "z_4"}) {
           const std::string name = v;
           edges.push_back({name, "a_" + name.substr(0, 1), name});
           edges.push_back({name, "ret_" + name, "r_1"});
         }
         return named("ex52_fischer", {"r_1", "x_1", "x_2", "y_1", "y_2", "z_1", "z_2", "z_3", "z_4"},
                      edges);
       }},
  };
  return table;
}

}  // namespace

LabelledGraph fixture(std::string_view name) {
  if (name == "3cc") name = "3cc_fischer";
  const auto& table = fixture_table();
  auto it = table.find(name);
  if (it == table.end()) fail(ErrorCode::UnknownFixture, "no fixture named '" + std::string(name) + "'");
  return it->second();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : fixture_table()) out.push_back(name);
  return out;
}

}  // namespace soficshift
