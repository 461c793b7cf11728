#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace soficshift::oracle {

namespace {

Mask bit(VertexId v) { return Mask{1} << v; }

Mask pre_symbol(const LabelledGraph& g, Symbol a, Mask target) {
  Mask out = 0;
  for (const Edge& e : g.edges()) {
    if (e.label == a && (target & bit(e.dst))) out |= bit(e.src);
  }
  return out;
}

void check_size(const LabelledGraph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("oracle limited to 64 vertices");
}

}  // namespace

Mask all_vertices(const LabelledGraph& g) {
  check_size(g);
  return g.vertex_count() == 64 ? ~Mask{0} : bit(static_cast<VertexId>(g.vertex_count())) - 1;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (VertexId v : s.members()) m |= bit(v);
  return m;
}

VertexSet to_set(const LabelledGraph& g, Mask m) {
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m & bit(v)) s.set(v);
  }
  return s;
}

Mask pre_word(const LabelledGraph& g, const Word& w, Mask target) {
  Mask t = target;
  for (auto it = w.rbegin(); it != w.rend() && t != 0; ++it) t = pre_symbol(g, *it, t);
  return t;
}

Mask start_set(const LabelledGraph& g, const Word& w) { return pre_word(g, w, all_vertices(g)); }

bool presentable(const LabelledGraph& g, const Word& w) { return start_set(g, w) != 0; }

std::set<Word> factor_words(const LabelledGraph& g, std::size_t max_len) {
  std::set<Word> out{Word{}};
  Word w;
  // Extend a path one edge at a time from each start vertex.
  auto walk = [&](auto&& self, VertexId v) -> void {
    if (w.size() == max_len) return;
    for (const Edge& e : g.edges()) {
      if (e.src != v) continue;
      w.push_back(e.label);
      out.insert(w);
      self(self, e.dst);
      w.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) walk(walk, v);
  return out;
}

std::set<Word> predecessor_words(const LabelledGraph& g, Mask u, std::size_t max_len) {
  std::set<Word> out;
  if (u == 0) return out;
  out.insert(Word{});
  // Words are grown at the front, tracking the set they can start from.
  std::vector<std::pair<Word, Mask>> frontier{{Word{}, u}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, Mask>> next;
    for (const auto& [w, t] : frontier) {
      for (Symbol a = 0; a < g.alphabet().size(); ++a) {
        const Mask p = pre_symbol(g, a, t);
        if (p == 0) continue;
        Word aw{a};
        aw.insert(aw.end(), w.begin(), w.end());
        out.insert(aw);
        next.emplace_back(std::move(aw), p);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::set<Mask> start_sets(const LabelledGraph& g, std::size_t max_len) {
  std::set<Mask> out;
  for (const Word& w : factor_words(g, max_len)) {
    if (!w.empty()) out.insert(start_set(g, w));
  }
  return out;
}

PredRelation pred_relation(const LabelledGraph& g, Mask u, Mask v) {
  PredRelation r;
  std::set<std::pair<Mask, Mask>> seen{{u, v}};
  std::queue<std::pair<Mask, Mask>> todo;
  todo.push({u, v});
  while (!todo.empty()) {
    const auto [x, y] = todo.front();
    todo.pop();
    if (x != 0 && y == 0) r.u_in_v = false;
    if (y != 0 && x == 0) r.v_in_u = false;
    if (x == 0 || y == 0) continue;
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      const std::pair<Mask, Mask> p{pre_symbol(g, a, x), pre_symbol(g, a, y)};
      if (seen.insert(p).second) todo.push(p);
    }
  }
  return r;
}

Mask periodic_core(const LabelledGraph& g, const Word& u) {
  Mask z = all_vertices(g);
  for (;;) {
    const Mask next = pre_word(g, u, z);
    if (next == z) return z;
    z = next;
  }
}

Mask ray_domain(const LabelledGraph& g, const Word& w, const Word& u) {
  return pre_word(g, w, periodic_core(g, u));
}

std::map<Mask, RayWitness> ray_witnesses(const LabelledGraph& g, std::size_t bound) {
  // Periodic parts: every u up to the bound whose powers can be followed.
  std::map<Mask, Word> cores;
  std::vector<std::pair<Word, Mask>> frontier{{Word{}, all_vertices(g)}};
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<std::pair<Word, Mask>> next;
    for (const auto& [w, t] : frontier) {
      for (Symbol a = 0; a < g.alphabet().size(); ++a) {
        const Mask p = pre_symbol(g, a, t);
        if (p == 0) continue;
        Word aw{a};
        aw.insert(aw.end(), w.begin(), w.end());
        const Mask z = periodic_core(g, aw);
        if (z != 0) cores.emplace(z, aw);
        next.emplace_back(std::move(aw), p);
      }
    }
    frontier = std::move(next);
  }
  // Prefixes: prepend up to `bound` symbols to each core.
  std::map<Mask, RayWitness> out;
  for (const auto& [z, u] : cores) {
    out.emplace(z, RayWitness{Word{}, u});
    std::vector<std::pair<Word, Mask>> level{{Word{}, z}};
    std::set<Mask> seen{z};
    for (std::size_t len = 1; len <= bound; ++len) {
      std::vector<std::pair<Word, Mask>> next;
      for (const auto& [w, t] : level) {
        for (Symbol a = 0; a < g.alphabet().size(); ++a) {
          const Mask p = pre_symbol(g, a, t);
          if (p == 0 || !seen.insert(p).second) continue;
          Word aw{a};
          aw.insert(aw.end(), w.begin(), w.end());
          out.emplace(p, RayWitness{aw, u});
          next.emplace_back(std::move(aw), p);
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

std::set<Mask> ray_domains(const LabelledGraph& g, std::size_t bound) {
  std::set<Mask> out;
  for (const auto& [m, witness] : ray_witnesses(g, bound)) out.insert(m);
  return out;
}

std::vector<Mask> hereditary_saturated(const LabelledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("hereditary scan limited to 24 vertices");
  std::vector<Mask> succ(n, 0);
  for (const Edge& e : g.edges()) succ[e.src] |= bit(e.dst);
  std::vector<Mask> out;
  for (Mask h = 0; h < (Mask{1} << n); ++h) {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      if ((h & bit(v)) && (succ[v] & ~h)) ok = false;
      if (!(h & bit(v)) && succ[v] != 0 && (succ[v] & ~h) == 0) ok = false;
    }
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<std::vector<bool>> reachability(const LabelledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) r[e.src][e.dst] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

bool labelled_isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.alphabet().symbols() != b.alphabet().symbols()) return false;
  if (a.vertex_count() > 9) throw std::invalid_argument("permutation oracle limited to 9 vertices");
  std::vector<Edge> target(b.edges().begin(), b.edges().end());
  std::sort(target.begin(), target.end());
  std::vector<VertexId> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Edge> mapped;
    for (const Edge& e : a.edges()) mapped.push_back(Edge{perm[e.src], e.label, perm[e.dst]});
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool digraph_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.node_count != b.node_count || a.arcs.size() != b.arcs.size()) return false;
  if (a.node_count > 9) throw std::invalid_argument("permutation oracle limited to 9 nodes");
  std::vector<std::uint32_t> perm(a.node_count);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Arc> mapped;
    for (const auto& [u, v] : a.arcs) mapped.emplace_back(perm[u], perm[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped == b.arcs) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace soficshift::oracle
