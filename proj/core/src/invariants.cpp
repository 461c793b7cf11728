#include "soficshift/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "soficshift/error.hpp"
#include "soficshift/graph_ops.hpp"

namespace soficshift {

Digraph Digraph::make(std::size_t n, std::vector<Arc> arcs) {
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) fail(ErrorCode::InvalidArgument, "arc endpoint out of range");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph{n, std::move(arcs)};
}

bool Digraph::has_arc(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{u, v});
}

bool Digraph::acyclic() const {
  const SccDecomposition s = scc(node_count, arcs);
  return std::none_of(s.cyclic.begin(), s.cyclic.end(), [](bool c) { return c; });
}

Digraph Digraph::closure() const {
  std::vector<std::vector<std::uint32_t>> adj(node_count);
  for (const auto& [u, v] : arcs) adj[u].push_back(v);
  std::vector<Arc> out;
  for (std::uint32_t s = 0; s < node_count; ++s) {
    std::vector<bool> seen(node_count, false);
    std::vector<std::uint32_t> stack(adj[s].begin(), adj[s].end());
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      for (auto w : adj[v]) stack.push_back(w);
    }
    for (std::uint32_t v = 0; v < node_count; ++v) {
      if (seen[v] && v != s) out.emplace_back(s, v);
    }
  }
  return make(node_count, std::move(out));
}

Digraph Digraph::reduction() const {
  const Digraph c = closure();
  std::vector<Arc> out;
  for (const auto& [u, v] : c.arcs) {
    bool implied = false;
    for (std::uint32_t w = 0; w < node_count && !implied; ++w) {
      implied = w != u && w != v && c.has_arc(u, w) && c.has_arc(w, v);
    }
    if (!implied) out.emplace_back(u, v);
  }
  return make(node_count, std::move(out));
}

ProperCommunicationGraph proper_communication_graph(const LabelledGraph& g) {
  const SccDecomposition comps = scc(g);
  ProperCommunicationGraph pcg;
  std::vector<std::int64_t> node_of(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    node_of[c] = static_cast<std::int64_t>(pcg.nodes.size());
    pcg.nodes.push_back(g.vertex_set(comps.members[c]));
    pcg.names.push_back(set_name(g, pcg.nodes.back()));
  }
  // Reachability on the condensation, passing through acyclic components.
  std::vector<std::vector<std::uint32_t>> adj(comps.size());
  for (const auto& [a, b] : comps.condensation) adj[a].push_back(b);
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (node_of[c] < 0) continue;
    std::vector<bool> seen(comps.size(), false);
    std::vector<std::uint32_t> stack(adj[c].begin(), adj[c].end());
    while (!stack.empty()) {
      const auto d = stack.back();
      stack.pop_back();
      if (seen[d]) continue;
      seen[d] = true;
      if (node_of[d] >= 0) {
        arcs.emplace_back(static_cast<std::uint32_t>(node_of[c]), static_cast<std::uint32_t>(node_of[d]));
      }
      for (auto e : adj[d]) stack.push_back(e);
    }
  }
  pcg.closure = Digraph::make(pcg.nodes.size(), std::move(arcs));
  pcg.reduced = pcg.closure.reduction();
  for (std::uint32_t r = 0; r < pcg.nodes.size(); ++r) {
    bool reaches_all = true;
    for (std::uint32_t v = 0; v < pcg.nodes.size() && reaches_all; ++v) {
      reaches_all = v == r || pcg.closure.has_arc(r, v);
    }
    if (reaches_all) {
      pcg.root = r;
      break;
    }
  }
  return pcg;
}

ProperCommunicationGraph pcg_invariant(const LabelledGraph& g, const CoverOptions& opts) {
  return proper_communication_graph(krieger_cover(g, opts).graph);
}

bool dag_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.node_count != b.node_count || a.arcs.size() != b.arcs.size()) return false;
  const std::size_t n = a.node_count;
  std::vector<std::vector<std::uint32_t>> out_a(n), in_a(n), out_b(n), in_b(n);
  for (const auto& [u, v] : a.arcs) {
    out_a[u].push_back(v);
    in_a[v].push_back(u);
  }
  for (const auto& [u, v] : b.arcs) {
    out_b[u].push_back(v);
    in_b[v].push_back(u);
  }

  // Joint colour refinement on out/in neighbour colours.
  std::vector<std::uint32_t> ca(n, 0), cb(n, 0);
  std::size_t classes = 1;
  for (;;) {
    using Sig = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    auto sig = [](const std::vector<std::uint32_t>& col, const auto& out, const auto& in,
                  std::uint32_t v) {
      Sig s{col[v], {}, {}};
      for (auto w : out[v]) std::get<1>(s).push_back(col[w]);
      for (auto w : in[v]) std::get<2>(s).push_back(col[w]);
      std::sort(std::get<1>(s).begin(), std::get<1>(s).end());
      std::sort(std::get<2>(s).begin(), std::get<2>(s).end());
      return s;
    };
    std::vector<Sig> sa, sb;
    for (std::uint32_t v = 0; v < n; ++v) {
      sa.push_back(sig(ca, out_a, in_a, v));
      sb.push_back(sig(cb, out_b, in_b, v));
    }
    std::map<Sig, std::uint32_t> table;
    for (const auto& s : sa) table.emplace(s, 0);
    for (const auto& s : sb) table.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [s, id] : table) id = next++;
    for (std::uint32_t v = 0; v < n; ++v) {
      ca[v] = table[sa[v]];
      cb[v] = table[sb[v]];
    }
    if (table.size() == classes) break;
    classes = table.size();
  }
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }

  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  std::vector<std::uint32_t> map(n, kFree), inverse(n, kFree);
  auto consistent = [&](std::uint32_t v, std::uint32_t w) {
    for (std::uint32_t u = 0; u < n; ++u) {
      const std::uint32_t x = u == v ? w : map[u];
      if (x == kFree) continue;
      if (a.has_arc(v, u) != b.has_arc(w, x)) return false;
      if (a.has_arc(u, v) != b.has_arc(x, w)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::uint32_t v) -> bool {
    if (v == n) return true;
    for (std::uint32_t w = 0; w < n; ++w) {
      if (inverse[w] != kFree || cb[w] != ca[v] || !consistent(v, w)) continue;
      map[v] = w;
      inverse[w] = v;
      if (self(self, v + 1)) return true;
      map[v] = kFree;
      inverse[w] = kFree;
    }
    return false;
  };
  return search(search, 0);
}

bool dag_isomorphic(const ProperCommunicationGraph& a, const ProperCommunicationGraph& b) {
  return dag_isomorphic(a.closure, b.closure);
}

std::string fresh_symbol(const LabelledGraph& g) {
  std::string s = "•";
  while (g.alphabet().contains(s)) s += '\'';
  return s;
}

bool flow_expand_check(const LabelledGraph& g, const std::string& a, const CoverOptions& opts) {
  const LabelledGraph expanded = symbol_expand(g, a, fresh_symbol(g));
  return dag_isomorphic(pcg_invariant(g, opts), pcg_invariant(expanded, opts));
}

bool condition_K(const LabelledGraph& g) {
  const SccDecomposition comps = scc(g);
  std::vector<std::size_t> internal(comps.size(), 0);
  for (const auto& e : g.edges()) {
    if (comps.component[e.src] == comps.component[e.dst]) ++internal[comps.component[e.src]];
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps.cyclic[c] && internal[c] == comps.members[c].size()) return false;
  }
  return true;
}

std::optional<std::size_t> IdealLattice::index_of(const VertexSet& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == s) return i;
  }
  return std::nullopt;
}

bool is_hereditary(const LabelledGraph& g, const VertexSet& h) {
  for (const auto& e : g.edges()) {
    if (h.test(e.src) && !h.test(e.dst)) return false;
  }
  return true;
}

bool is_saturated(const LabelledGraph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.test(v) || g.out_edges(v).empty()) continue;
    bool inside = true;
    for (auto k : g.out_edges(v)) inside = inside && h.test(g.edges()[k].dst);
    if (inside) return false;
  }
  return true;
}

VertexSet hereditary_saturation(const LabelledGraph& g, const VertexSet& h) {
  VertexSet out = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : g.edges()) {
      if (out.test(e.src) && !out.test(e.dst)) {
        out.set(e.dst);
        changed = true;
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (out.test(v) || g.out_edges(v).empty()) continue;
      bool inside = true;
      for (auto k : g.out_edges(v)) inside = inside && out.test(g.edges()[k].dst);
      if (inside) {
        out.set(v);
        changed = true;
      }
    }
  }
  return out;
}

IdealLattice hereditary_saturated_subsets(const LabelledGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n > 31) {
    fail(ErrorCode::CapExceeded,
         "ideal lattice scan limited to " + std::to_string(std::min<std::size_t>(cap, 31)) +
             " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint32_t> succ(n, 0);
  for (const auto& e : g.edges()) succ[e.src] |= std::uint32_t{1} << e.dst;

  IdealLattice lattice;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (std::uint32_t v = 0; v < n && ok; ++v) {
      const bool in = (mask >> v) & 1U;
      const bool closed = (succ[v] & ~mask) == 0;
      if (in) {
        ok = closed;
      } else {
        ok = succ[v] == 0 || !closed;
      }
    }
    if (!ok) continue;
    VertexSet s = g.empty_set();
    for (std::uint32_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.set(v);
    }
    lattice.elements.push_back(std::move(s));
  }
  std::sort(lattice.elements.begin(), lattice.elements.end());

  std::vector<Arc> cover;
  const auto& el = lattice.elements;
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    for (std::uint32_t j = 0; j < el.size(); ++j) {
      if (i == j || !el[i].is_subset_of(el[j]) || el[i] == el[j]) continue;
      bool between = false;
      for (std::uint32_t k = 0; k < el.size() && !between; ++k) {
        between = k != i && k != j && el[i].is_subset_of(el[k]) && el[k].is_subset_of(el[j]);
      }
      if (!between) cover.emplace_back(i, j);
    }
  }
  lattice.hasse = Digraph::make(el.size(), std::move(cover));
  return lattice;
}

}  // namespace soficshift
