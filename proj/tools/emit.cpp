#include "emit.hpp"

#include <map>
#include <sstream>

namespace soficshift::cli {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dot_graph(const LabelledGraph& g) {
  std::ostringstream out;
  out << "digraph " << quote(g.name()) << " {\n  node [shape=box];\n";
  for (const auto& v : g.vertex_names()) out << "  " << quote(v) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << quote(g.vertex_name(e.src)) << " -> " << quote(g.vertex_name(e.dst))
        << " [label=" << quote(g.alphabet()[e.label]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_cover(const CoverResult& c) {
  const LabelledGraph& g = c.graph;
  std::ostringstream out;
  out << "digraph " << quote(g.name()) << " {\n  node [shape=box];\n";
  std::map<std::size_t, std::vector<VertexId>> by_layer;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quote(g.vertex_name(v)) << " [label=" << quote(c.vertices[v].display_name) << "];\n";
    if (c.vertices[v].layer) by_layer[*c.vertices[v].layer].push_back(v);
  }
  for (const auto& [layer, members] : by_layer) {
    out << "  { rank=same;";
    for (auto v : members) out << " " << quote(g.vertex_name(v)) << ";";
    out << " }\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << quote(g.vertex_name(e.src)) << " -> " << quote(g.vertex_name(e.dst))
        << " [label=" << quote(g.alphabet()[e.label]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_pcg(const ProperCommunicationGraph& p) {
  std::ostringstream out;
  out << "digraph \"pcg\" {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < p.node_count(); ++i) {
    out << "  n" << i << " [label=" << quote(p.names[i]) << (p.root == i ? ", peripheries=2" : "")
        << "];\n";
  }
  for (const auto& [u, v] : p.reduced.arcs) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_hasse(const LabelledGraph& g, const IdealLattice& lattice) {
  std::ostringstream out;
  out << "digraph \"ideals\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  h" << i << " [label=" << quote(set_name(g, lattice.elements[i])) << "];\n";
  }
  for (const auto& [u, v] : lattice.hasse.arcs) out << "  h" << u << " -> h" << v << ";\n";
  out << "}\n";
  return out.str();
}

Json word_json(const LabelledGraph& g, const Word& w) {
  Json out = Json::array();
  for (auto a : w) out.push_back(g.alphabet()[a]);
  return out;
}

Json set_json(const LabelledGraph& g, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(g.vertex_name(v)); });
  return out;
}

Json graph_json(const LabelledGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json::array({g.vertex_name(e.src), g.alphabet()[e.label], g.vertex_name(e.dst)}));
  }
  return Json{{"name", g.name()},
              {"alphabet", g.alphabet().symbols()},
              {"vertices", g.vertex_names()},
              {"edges", std::move(edges)}};
}

Json predicates_json(const Predicates& p) {
  Json out{{"left_resolving", p.left_resolving},
           {"right_resolving", p.right_resolving},
           {"essential", p.essential},
           {"irreducible_graph", p.irreducible_graph}};
  out["predecessor_separated"] = p.predecessor_separated ? Json(*p.predecessor_separated) : Json(nullptr);
  return out;
}

Json cover_json(const CoverResult& c) {
  const LabelledGraph& base = *c.base;
  Json vertices = Json::array();
  for (VertexId v = 0; v < c.vertices.size(); ++v) {
    const auto& cv = c.vertices[v];
    Json entry{{"name", c.graph.vertex_name(v)},
               {"display_name", cv.display_name},
               {"class_key", cv.class_key.hex()},
               {"representative", set_json(base, cv.representative)},
               {"witness_word", word_json(base, cv.witness_word)}};
    if (!cv.ray_period.empty()) {
      entry["ray"] = Json{{"prefix", word_json(base, cv.ray_prefix)},
                          {"period", word_json(base, cv.ray_period)}};
    } else {
      entry["ray"] = nullptr;
    }
    entry["layer"] = cv.layer ? Json(*cv.layer) : Json(nullptr);
    entry["flags"] = Json{{"krieger", cv.flags.krieger},
                          {"non_decomposable", cv.flags.non_decomposable},
                          {"in_gfc", cv.flags.in_gfc},
                          {"in_fischer_top", cv.flags.in_fischer_top},
                          {"essential_part", cv.flags.essential_part}};
    vertices.push_back(std::move(entry));
  }
  Json histogram = Json::object();
  for (const auto& [layer, count] : c.layer_histogram()) histogram[std::to_string(layer)] = count;
  return Json{{"kind", std::string(to_string(c.kind))},
              {"vertex_count", c.graph.vertex_count()},
              {"edge_count", c.graph.edge_count()},
              {"layer_histogram", std::move(histogram)},
              {"graph", graph_json(c.graph)},
              {"vertices", std::move(vertices)}};
}

Json pcg_json(const ProperCommunicationGraph& p) {
  Json arcs = Json::array();
  for (const auto& [u, v] : p.closure.arcs) arcs.push_back(Json::array({p.names[u], p.names[v]}));
  Json reduced = Json::array();
  for (const auto& [u, v] : p.reduced.arcs) reduced.push_back(Json::array({p.names[u], p.names[v]}));
  return Json{{"node_count", p.node_count()},
              {"arc_count", p.arc_count()},
              {"root", p.root ? Json(p.names[*p.root]) : Json(nullptr)},
              {"nodes", p.names},
              {"arcs", std::move(arcs)},
              {"reduced_arcs", std::move(reduced)}};
}

Json lattice_json(const LabelledGraph& g, const IdealLattice& lattice) {
  Json elements = Json::array();
  for (const auto& e : lattice.elements) elements.push_back(set_json(g, e));
  Json hasse = Json::array();
  for (const auto& [u, v] : lattice.hasse.arcs) hasse.push_back(Json::array({u, v}));
  return Json{{"ideal_count", lattice.size()}, {"elements", std::move(elements)}, {"hasse", std::move(hasse)}};
}

}  // namespace soficshift::cli
