#include "soficshift/graph_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "soficshift/error.hpp"
#include "soficshift/language.hpp"

namespace soficshift {

bool is_left_resolving(const LabelledGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      if (g.predecessors(a, v).count() > 1) return false;
    }
  }
  return true;
}

bool is_right_resolving(const LabelledGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      if (g.successors(a, v).count() > 1) return false;
    }
  }
  return true;
}

bool is_essential(const LabelledGraph& g) {
  if (g.empty()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty() || g.in_edges(v).empty()) return false;
  }
  return true;
}

bool is_irreducible_graph(const LabelledGraph& g) {
  return g.edge_count() > 0 && scc(g).size() == 1;
}

bool is_predecessor_separated(const LabelledGraph& g) {
  if (!is_essential(g)) {
    fail(ErrorCode::PredSepRequiresEssential,
         "predecessor separation is only defined for essential graphs");
  }
  std::unordered_set<PredecessorClassKey> seen;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen.insert(class_key(g, g.singleton(v))).second) return false;
  }
  return true;
}

Predicates predicates(const LabelledGraph& g) {
  Predicates p;
  p.left_resolving = is_left_resolving(g);
  p.right_resolving = is_right_resolving(g);
  p.essential = is_essential(g);
  p.irreducible_graph = is_irreducible_graph(g);
  if (p.essential) p.predecessor_separated = is_predecessor_separated(g);
  return p;
}

VertexSet essential_core(const LabelledGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet alive = g.all_vertices();
  std::vector<std::size_t> out_deg(n), in_deg(n);
  for (const auto& e : g.edges()) {
    ++out_deg[e.src];
    ++in_deg[e.dst];
  }
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    if (out_deg[v] == 0 || in_deg[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (!alive.test(v)) continue;
    alive.reset(v);
    for (auto k : g.out_edges(v)) {
      const VertexId w = g.edges()[k].dst;
      if (alive.test(w) && --in_deg[w] == 0) stack.push_back(w);
    }
    for (auto k : g.in_edges(v)) {
      const VertexId u = g.edges()[k].src;
      if (alive.test(u) && --out_deg[u] == 0) stack.push_back(u);
    }
  }
  return alive;
}

LabelledGraph trim_to_essential(const LabelledGraph& g) {
  VertexSet keep = essential_core(g);
  if (keep.empty()) fail(ErrorCode::EmptyAfterTrim, "no vertex of '" + g.name() + "' is essential");
  if (keep.count() == g.vertex_count()) return g;
  return induced_subgraph(g, keep, false);
}

LabelledGraph transpose(const LabelledGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(Edge{e.dst, e.label, e.src});
  return LabelledGraph::from_indexed(g.name(), g.vertex_names(), g.alphabet().symbols(),
                                     std::move(edges));
}

LabelledGraph symbol_expand(const LabelledGraph& g, const std::string& a,
                            const std::string& fresh) {
  const auto sym = g.alphabet().find(a);
  if (!sym) fail(ErrorCode::InvalidArgument, "symbol '" + a + "' is not in the alphabet");
  if (g.alphabet().contains(fresh)) {
    fail(ErrorCode::FreshSymbolClash, "symbol '" + fresh + "' already occurs");
  }
  if (!is_valid_token(fresh)) fail(ErrorCode::InvalidArgument, "invalid symbol '" + fresh + "'");

  std::vector<std::string> vertices = g.vertex_names();
  std::set<std::string> taken(vertices.begin(), vertices.end());
  std::vector<std::string> alphabet = g.alphabet().symbols();
  alphabet.push_back(fresh);
  const auto fresh_index = static_cast<Symbol>(alphabet.size() - 1);

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.label != *sym) {
      edges.push_back(e);
      continue;
    }
    std::string mid = g.vertex_name(e.src) + "|" + a + "|" + g.vertex_name(e.dst);
    while (taken.count(mid)) mid += '\'';
    taken.insert(mid);
    const auto m = static_cast<VertexId>(vertices.size());
    vertices.push_back(mid);
    edges.push_back(Edge{e.src, e.label, m});
    edges.push_back(Edge{m, fresh_index, e.dst});
  }
  return LabelledGraph::from_indexed(g.name(), std::move(vertices), alphabet, std::move(edges));
}

LabelledGraph induced_subgraph(const LabelledGraph& g, const VertexSet& keep,
                               bool require_presentation) {
  if (keep.universe() != g.vertex_count() || (keep.owner() != 0 && keep.owner() != g.id())) {
    fail(ErrorCode::GraphMismatch, "vertex set belongs to a different graph");
  }
  if (keep.empty()) fail(ErrorCode::InvalidArgument, "induced subgraph on an empty vertex set");
  std::vector<VertexId> index(g.vertex_count(), ~VertexId{0});
  std::vector<std::string> names;
  keep.for_each([&](VertexId v) {
    index[v] = static_cast<VertexId>(names.size());
    names.push_back(g.vertex_name(v));
  });
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.test(e.src) && keep.test(e.dst)) edges.push_back(Edge{index[e.src], e.label, index[e.dst]});
  }
  if (edges.empty() && require_presentation) {
    fail(ErrorCode::EmptyInducedAlphabet, "induced subgraph has no edges");
  }
  return LabelledGraph::from_indexed(g.name(), std::move(names), g.alphabet().symbols(),
                                     std::move(edges));
}

LabelledGraph disjoint_union(const LabelledGraph& g1, const LabelledGraph& g2) {
  if (g1.empty() || g2.empty()) fail(ErrorCode::InvalidArgument, "disjoint union of an empty graph");
  for (const auto& s : g1.alphabet().symbols()) {
    if (g2.alphabet().contains(s)) {
      fail(ErrorCode::AlphabetOverlap, "symbol '" + s + "' occurs in both graphs");
    }
  }
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  for (const auto& v : g1.vertex_names()) names.push_back("1/" + v);
  for (const auto& v : g2.vertex_names()) names.push_back("2/" + v);
  for (const auto& e : g1.edges()) {
    edges.push_back({"1/" + g1.vertex_name(e.src), g1.alphabet()[e.label], "1/" + g1.vertex_name(e.dst)});
  }
  for (const auto& e : g2.edges()) {
    edges.push_back({"2/" + g2.vertex_name(e.src), g2.alphabet()[e.label], "2/" + g2.vertex_name(e.dst)});
  }
  return LabelledGraph::from_named(g1.name() + "+" + g2.name(), std::move(names), edges);
}

SccDecomposition scc(std::size_t n,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs) {
  std::vector<std::uint32_t> offsets(n + 1, 0), targets(arcs.size());
  for (const auto& [s, d] : arcs) ++offsets[s + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& [s, d] : arcs) targets[fill[s]++] = d;
  }

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> order(n, kUnset), low(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<VertexId>> found;
  std::uint32_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next arc position).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (order[root] != kUnset) continue;
    frames.emplace_back(root, offsets[root]);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < offsets[v + 1]) {
        const std::uint32_t w = targets[pos++];
        if (order[w] == kUnset) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, offsets[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        std::vector<VertexId> members;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccDecomposition out;
  out.component.assign(n, 0);
  for (std::uint32_t c = 0; c < found.size(); ++c) {
    for (auto v : found[c]) out.component[v] = c;
  }
  out.members = std::move(found);
  out.cyclic.assign(out.members.size(), false);
  std::set<std::pair<std::uint32_t, std::uint32_t>> condensed;
  for (const auto& [s, d] : arcs) {
    const auto cs = out.component[s];
    const auto cd = out.component[d];
    if (cs == cd) {
      out.cyclic[cs] = true;
    } else {
      condensed.emplace(cs, cd);
    }
  }
  out.condensation.assign(condensed.begin(), condensed.end());
  return out;
}

SccDecomposition scc(const LabelledGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  arcs.reserve(g.edge_count());
  for (const auto& e : g.edges()) arcs.emplace_back(e.src, e.dst);
  return scc(g.vertex_count(), arcs);
}

namespace {

// Colour refinement run on both graphs with a shared colour table so that
// colours are comparable across them.
struct JointColouring {
  std::vector<std::uint32_t> a, b;
};

JointColouring refine_colours(const LabelledGraph& ga, const LabelledGraph& gb,
                              const std::vector<Symbol>& b_label_of_a) {
  using Signature = std::pair<std::uint32_t, std::vector<std::tuple<int, Symbol, std::uint32_t>>>;
  JointColouring c;
  c.a.assign(ga.vertex_count(), 0);
  c.b.assign(gb.vertex_count(), 0);
  std::size_t classes = 1;
  for (;;) {
    auto signature = [](const LabelledGraph& g, const std::vector<std::uint32_t>& col, VertexId v,
                        auto&& label) {
      Signature s{col[v], {}};
      for (auto k : g.out_edges(v)) {
        const auto& e = g.edges()[k];
        s.second.emplace_back(0, label(e.label), col[e.dst]);
      }
      for (auto k : g.in_edges(v)) {
        const auto& e = g.edges()[k];
        s.second.emplace_back(1, label(e.label), col[e.src]);
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sa, sb;
    for (VertexId v = 0; v < ga.vertex_count(); ++v) {
      sa.push_back(signature(ga, c.a, v, [&](Symbol x) { return b_label_of_a[x]; }));
    }
    for (VertexId v = 0; v < gb.vertex_count(); ++v) {
      sb.push_back(signature(gb, c.b, v, [](Symbol x) { return x; }));
    }
    std::map<Signature, std::uint32_t> table;
    for (const auto& s : sa) table.emplace(s, 0);
    for (const auto& s : sb) table.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (VertexId v = 0; v < ga.vertex_count(); ++v) c.a[v] = table[sa[v]];
    for (VertexId v = 0; v < gb.vertex_count(); ++v) c.b[v] = table[sb[v]];
    if (table.size() == classes) return c;
    classes = table.size();
  }
}

}  // namespace

std::optional<std::vector<VertexId>> find_labelled_isomorphism(const LabelledGraph& a,
                                                               const LabelledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.alphabet().symbols() != b.alphabet().symbols()) {
    return std::nullopt;
  }
  const std::size_t n = a.vertex_count();
  std::vector<Symbol> label_map(a.alphabet().size());
  for (Symbol s = 0; s < label_map.size(); ++s) label_map[s] = s;

  auto col = refine_colours(a, b, label_map);
  {
    auto ha = col.a, hb = col.b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  // Visit a's vertices so that each one after the first of its component is
  // adjacent to something already placed.
  std::vector<VertexId> visit;
  {
    std::vector<bool> seen(n, false);
    std::vector<VertexId> starts(n);
    for (VertexId v = 0; v < n; ++v) starts[v] = v;
    std::map<std::uint32_t, std::size_t> class_size;
    for (auto c : col.a) ++class_size[c];
    std::stable_sort(starts.begin(), starts.end(), [&](VertexId x, VertexId y) {
      return class_size[col.a[x]] < class_size[col.a[y]];
    });
    for (auto s : starts) {
      if (seen[s]) continue;
      std::vector<VertexId> queue{s};
      seen[s] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const VertexId v = queue[i];
        visit.push_back(v);
        auto push = [&](VertexId w) {
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        };
        for (auto k : a.out_edges(v)) push(a.edges()[k].dst);
        for (auto k : a.in_edges(v)) push(a.edges()[k].src);
      }
    }
  }

  constexpr VertexId kFree = ~VertexId{0};
  std::vector<VertexId> map(n, kFree), inverse(n, kFree);

  auto consistent = [&](VertexId v, VertexId w) {
    for (auto k : a.out_edges(v)) {
      const auto& e = a.edges()[k];
      if (map[e.dst] != kFree || e.dst == v) {
        const VertexId t = e.dst == v ? w : map[e.dst];
        if (!b.has_edge(w, e.label, t)) return false;
      }
    }
    for (auto k : a.in_edges(v)) {
      const auto& e = a.edges()[k];
      if (map[e.src] != kFree && e.src != v && !b.has_edge(map[e.src], e.label, w)) return false;
    }
    // Edge counts must agree towards placed vertices in b as well.
    for (auto k : b.out_edges(w)) {
      const auto& e = b.edges()[k];
      const VertexId s = e.dst == w ? v : inverse[e.dst];
      if (s != kFree && !a.has_edge(v, e.label, s)) return false;
    }
    for (auto k : b.in_edges(w)) {
      const auto& e = b.edges()[k];
      const VertexId s = inverse[e.src];
      if (s != kFree && e.src != w && !a.has_edge(s, e.label, v)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexId v = visit[depth];
    for (VertexId w = 0; w < n; ++w) {
      if (inverse[w] != kFree || col.b[w] != col.a[v]) continue;
      if (!consistent(v, w)) continue;
      map[v] = w;
      inverse[w] = v;
      if (self(self, depth + 1)) return true;
      map[v] = kFree;
      inverse[w] = kFree;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool labelled_isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  return find_labelled_isomorphism(a, b).has_value();
}

LabelledGraph relabel(const LabelledGraph& g,
                      const std::vector<std::pair<std::string, std::string>>& mapping) {
  std::vector<NamedEdge> edges;
  for (const auto& e : g.edges()) {
    std::string label = g.alphabet()[e.label];
    for (const auto& [from, to] : mapping) {
      if (from == label) {
        label = to;
        break;
      }
    }
    edges.push_back({g.vertex_name(e.src), label, g.vertex_name(e.dst)});
  }
  return LabelledGraph::from_named(g.name(), g.vertex_names(), edges);
}

}  // namespace soficshift
