#include "soficshift/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "soficshift/error.hpp"
#include "soficshift/graph_ops.hpp"

namespace soficshift {

std::string_view to_string(CoverKind kind) noexcept {
  switch (kind) {
    case CoverKind::PastSet: return "pastset";
    case CoverKind::Krieger: return "krieger";
    case CoverKind::Fischer: return "fischer";
    case CoverKind::GeneralizedFischer: return "gfc";
    case CoverKind::Multiplicity: return "multiplicity";
  }
  return "unknown";
}

std::string set_name(const LabelledGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ',';
    out += g.vertex_name(v);
    first = false;
  });
  return out + "}";
}

std::optional<VertexId> CoverResult::find(const PredecessorClassKey& key) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].class_key == key) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

std::vector<PredecessorClassKey> CoverResult::keys() const {
  std::vector<PredecessorClassKey> out;
  for (const auto& v : vertices) out.push_back(v.class_key);
  return out;
}

std::map<std::size_t, std::size_t> CoverResult::layer_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& v : vertices) {
    if (v.layer) ++h[*v.layer];
  }
  return h;
}

LabelledGraph CoverResult::layer_subgraph(std::size_t n) const {
  VertexSet keep = graph.empty_set();
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (vertices[v].layer == n) keep.set(v);
  }
  if (keep.empty()) fail(ErrorCode::InvalidArgument, "no vertex in layer " + std::to_string(n));
  return induced_subgraph(graph, keep, false);
}

namespace {

std::string cover_name(const LabelledGraph& base, CoverKind kind) {
  return base.name() + "_" + std::string(to_string(kind));
}

void require_essential(const LabelledGraph& g) {
  if (!is_essential(g)) {
    fail(ErrorCode::NotEssential, "graph '" + g.name() + "' is not essential; trim it first");
  }
}

void verify_cover(const CoverResult& c) {
  if (!is_left_resolving(c.graph)) {
    fail(ErrorCode::Internal, std::string(to_string(c.kind)) + " cover is not left-resolving");
  }
}

void verify_separated(const CoverResult& c) {
  std::unordered_set<PredecessorClassKey> seen;
  for (VertexId v = 0; v < c.graph.vertex_count(); ++v) {
    if (!seen.insert(class_key(c.graph, c.graph.singleton(v))).second) {
      fail(ErrorCode::Internal,
           std::string(to_string(c.kind)) + " cover is not predecessor-separated");
    }
  }
}

std::vector<std::string> unique_names(std::vector<std::string> names) {
  std::set<std::string> taken;
  for (auto& n : names) {
    while (!taken.insert(n).second) n += '\'';
  }
  return names;
}

/// Subsets S(w) with their classes, shared by the past set and Krieger covers.
struct ClassTable {
  std::shared_ptr<const LabelledGraph> g;
  SubsetAutomaton sa;
  std::vector<bool> realized;
  std::vector<std::uint32_t> subset_class;
  std::vector<PredecessorClassKey> keys;
  /// Representative subset of each class: least (cardinality, index) among
  /// realized members.
  std::vector<std::size_t> rep;
  std::unordered_map<PredecessorClassKey, std::uint32_t> by_key;
};

ClassTable build_classes(const LabelledGraph& g, const LanguageIndex& index,
                         const CoverOptions& opts) {
  ClassTable t;
  t.g = std::make_shared<const LabelledGraph>(g);
  t.sa = reachable_subsets(g, opts.subset_cap);
  const std::size_t n = t.sa.size();
  t.realized.assign(n, true);
  t.realized[0] = false;
  for (auto x : t.sa.transitions) {
    if (x == 0) t.realized[0] = true;
  }
  t.subset_class.assign(n, 0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.sa.subsets[a].count() < t.sa.subsets[b].count();
  });
  // Realized subsets first so that representatives are realized.
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return t.realized[i]; });
  for (auto i : order) {
    PredecessorClassKey key = index.key(t.sa.subsets[i]);
    auto [it, inserted] = t.by_key.emplace(key, static_cast<std::uint32_t>(t.keys.size()));
    if (inserted) {
      t.keys.push_back(std::move(key));
      t.rep.push_back(i);
    }
    t.subset_class[i] = it->second;
  }

  // Past-closedness: members of one class must move together under every
  // symbol.
  const std::size_t k = t.sa.alphabet_size;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = t.rep[t.subset_class[i]];
    for (Symbol a = 0; a < k; ++a) {
      const auto x = t.sa.next(i, a);
      const auto y = t.sa.next(r, a);
      if ((x < 0) != (y < 0) ||
          (x >= 0 && t.subset_class[static_cast<std::size_t>(x)] !=
                         t.subset_class[static_cast<std::size_t>(y)])) {
        fail(ErrorCode::Internal, "predecessor classes are not past-closed");
      }
    }
  }
  return t;
}

/// Cover on the given classes. With `closed`, every edge target must be one
/// of the classes.
CoverResult build_cover(const ClassTable& t, CoverKind kind, std::vector<std::uint32_t> classes,
                        bool closed) {
  std::sort(classes.begin(), classes.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& sa = t.sa.subsets[t.rep[a]];
    const auto& sb = t.sa.subsets[t.rep[b]];
    if (sa < sb) return true;
    if (sb < sa) return false;
    return t.rep[a] < t.rep[b];
  });
  std::unordered_map<std::uint32_t, VertexId> vertex_of;
  std::vector<std::string> names;
  for (auto c : classes) {
    vertex_of.emplace(c, static_cast<VertexId>(names.size()));
    names.push_back(set_name(*t.g, t.sa.subsets[t.rep[c]]));
  }
  names = unique_names(std::move(names));

  std::vector<Edge> edges;
  const std::size_t k = t.sa.alphabet_size;
  for (VertexId v = 0; v < classes.size(); ++v) {
    const std::size_t r = t.rep[classes[v]];
    for (Symbol a = 0; a < k; ++a) {
      const auto x = t.sa.next(r, a);
      if (x < 0) continue;
      auto it = vertex_of.find(t.subset_class[static_cast<std::size_t>(x)]);
      if (it == vertex_of.end()) {
        if (closed) fail(ErrorCode::Internal, "cover vertex set is not closed under prepending");
        continue;
      }
      edges.push_back(Edge{it->second, a, v});
    }
  }

  CoverResult out;
  out.kind = kind;
  out.base = t.g;
  out.graph = LabelledGraph::from_indexed(cover_name(*t.g, kind), names,
                                          t.g->alphabet().symbols(), std::move(edges));
  for (VertexId v = 0; v < classes.size(); ++v) {
    CoverVertex cv;
    const std::size_t r = t.rep[classes[v]];
    cv.class_key = t.keys[classes[v]];
    cv.representative = t.sa.subsets[r];
    cv.witness_word = t.sa.witness[r];
    cv.display_name = out.graph.vertex_name(v);
    out.vertices.push_back(std::move(cv));
  }
  return out;
}

CoverResult restrict_cover(const CoverResult& c, const VertexSet& keep, CoverKind kind) {
  CoverResult out;
  out.kind = kind;
  out.base = c.base;
  const LabelledGraph sub = induced_subgraph(c.graph, keep, false);
  out.graph = LabelledGraph::from_indexed(cover_name(*c.base, kind), sub.vertex_names(),
                                          sub.alphabet().symbols(),
                                          {sub.edges().begin(), sub.edges().end()});
  keep.for_each([&](VertexId v) { out.vertices.push_back(c.vertices[v]); });
  return out;
}

void mark_essential(CoverResult& c) {
  const VertexSet core = essential_core(c.graph);
  for (VertexId v = 0; v < c.vertices.size(); ++v) c.vertices[v].flags.essential_part = core.test(v);
}

VertexSet reaching(const LabelledGraph& g, const VertexSet& targets) {
  VertexSet seen = targets;
  std::vector<VertexId> stack = targets.members();
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto k : g.in_edges(v)) {
      const VertexId u = g.edges()[k].src;
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
    }
  }
  return seen;
}

struct BothCovers {
  CoverResult past;
  CoverResult krieger;
};

BothCovers build_both(const LabelledGraph& g, const CoverOptions& opts) {
  require_essential(g);
  LanguageIndex index(g, opts.subset_cap);
  const ClassTable t = build_classes(g, index, opts);

  std::vector<std::uint32_t> past_classes;
  std::vector<bool> in_past(t.keys.size(), false);
  for (std::size_t i = 0; i < t.sa.size(); ++i) {
    if (t.realized[i] && !in_past[t.subset_class[i]]) {
      in_past[t.subset_class[i]] = true;
      past_classes.push_back(t.subset_class[i]);
    }
  }

  const auto rays = krieger_classes(g, index, opts.monoid_cap);
  std::vector<std::uint32_t> krieger_list;
  std::unordered_map<std::uint32_t, const KriegerClass*> ray_of;
  for (const auto& kc : rays) {
    auto it = t.by_key.find(kc.key);
    if (it == t.by_key.end() || !in_past[it->second]) {
      fail(ErrorCode::Internal, "ray class not realized by a word");
    }
    krieger_list.push_back(it->second);
    ray_of.emplace(it->second, &kc);
  }

  BothCovers out{build_cover(t, CoverKind::PastSet, past_classes, true),
                 build_cover(t, CoverKind::Krieger, krieger_list, true)};

  CoverResult& kc = out.krieger;
  for (auto& v : kc.vertices) {
    const auto* ray = ray_of.at(t.by_key.at(v.class_key));
    v.ray_prefix = ray->prefix;
    v.ray_period = ray->period;
    v.flags.krieger = true;
  }
  const VertexSet nd = non_decomposable_vertices(kc);
  const VertexSet gfc = reaching(kc.graph, nd);
  const SccDecomposition comps = scc(kc.graph);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    const VertexSet part = kc.graph.vertex_set(comps.members[c]);
    if (shift_language_equal(induced_subgraph(kc.graph, part, false), g, opts.subset_cap)) {
      part.for_each([&](VertexId v) { kc.vertices[v].flags.in_fischer_top = true; });
      break;
    }
  }
  for (VertexId v = 0; v < kc.vertices.size(); ++v) {
    kc.vertices[v].flags.non_decomposable = nd.test(v);
    kc.vertices[v].flags.in_gfc = gfc.test(v);
  }
  mark_essential(kc);

  for (auto& v : out.past.vertices) {
    if (auto k = kc.find(v.class_key)) {
      const auto& kv = kc.vertices[*k];
      v.flags = kv.flags;
      v.ray_prefix = kv.ray_prefix;
      v.ray_period = kv.ray_period;
    }
  }
  mark_essential(out.past);

  if (opts.verify) {
    for (const auto* c : {&out.past, &out.krieger}) {
      verify_cover(*c);
      verify_separated(*c);
    }
  }
  return out;
}

}  // namespace

CoverResult past_set_cover(const LabelledGraph& g, const CoverOptions& opts) {
  return build_both(g, opts).past;
}

CoverResult krieger_cover(const LabelledGraph& g, const CoverOptions& opts) {
  return build_both(g, opts).krieger;
}

CoverResult fischer_cover(const LabelledGraph& g, const CoverOptions& opts) {
  const CoverResult k = krieger_cover(g, opts);
  VertexSet keep = k.graph.empty_set();
  for (VertexId v = 0; v < k.vertices.size(); ++v) {
    if (k.vertices[v].flags.in_fischer_top) keep.set(v);
  }
  if (keep.empty()) {
    fail(ErrorCode::NotIrreducible, "no irreducible component presents the shift of '" + g.name() + "'");
  }
  CoverResult f = restrict_cover(k, keep, CoverKind::Fischer);
  mark_essential(f);
  if (opts.verify) {
    verify_cover(f);
    verify_separated(f);
  }
  return f;
}

VertexSet non_decomposable_vertices(const CoverResult& krieger) {
  const LabelledGraph& base = *krieger.base;
  LanguageIndex index(base);
  VertexSet out = krieger.graph.empty_set();
  for (VertexId p = 0; p < krieger.vertices.size(); ++p) {
    const auto& pv = krieger.vertices[p];
    VertexSet below = base.empty_set();
    bool any = false;
    for (VertexId q = 0; q < krieger.vertices.size(); ++q) {
      if (q == p) continue;
      const auto& qv = krieger.vertices[q];
      if (key_subset(qv.class_key, pv.class_key)) {
        below |= qv.representative;
        any = true;
      }
    }
    if (!any || !(index.key(below) == pv.class_key)) out.set(p);
  }
  return out;
}

CoverResult generalized_fischer_cover(const CoverResult& krieger) {
  const VertexSet nd = non_decomposable_vertices(krieger);
  const VertexSet keep = reaching(krieger.graph, nd);
  if (keep.empty()) fail(ErrorCode::Internal, "Krieger cover has no non-decomposable vertex");
  CoverResult out = restrict_cover(krieger, keep, CoverKind::GeneralizedFischer);
  for (auto& v : out.vertices) v.flags.in_gfc = true;
  mark_essential(out);
  return out;
}

CoverResult generalized_fischer_cover(const LabelledGraph& g, const CoverOptions& opts) {
  CoverResult out = generalized_fischer_cover(krieger_cover(g, opts));
  if (opts.verify) {
    verify_cover(out);
    verify_separated(out);
  }
  return out;
}

CoverResult layers(const CoverResult& cover, const CoverResult& foundation) {
  if (!cover.base || !foundation.base ||
      (cover.base->id() != foundation.base->id() && !(*cover.base == *foundation.base))) {
    fail(ErrorCode::GraphMismatch, "cover and foundation come from different presentations");
  }
  const LabelledGraph& base = *cover.base;
  LanguageIndex index(base);
  CoverResult out = cover;
  // Equal bases built separately carry different identities.
  std::vector<VertexSet> parts;
  for (const auto& fv : foundation.vertices) {
    const auto members = fv.representative.members();
    parts.push_back(base.vertex_set(members));
  }

  auto part_name = [&](VertexId f) {
    const auto& fv = foundation.vertices[f];
    if (fv.representative.count() == 1) {
      return "P(" + base.vertex_name(fv.representative.members().front()) + ")";
    }
    return "P(" + foundation.graph.vertex_name(f) + ")";
  };

  for (auto& pv : out.vertices) {
    std::vector<VertexId> cands;
    VertexSet all = base.empty_set();
    for (VertexId f = 0; f < foundation.vertices.size(); ++f) {
      if (key_subset(foundation.vertices[f].class_key, pv.class_key)) {
        cands.push_back(f);
        all |= parts[f];
      }
    }
    if (cands.empty() || !(index.key(all) == pv.class_key)) {
      fail(ErrorCode::NoCoverExists,
           "class " + pv.display_name + " is not a union of foundation classes");
    }

    // Iterative deepening over combinations in lexicographic order.
    std::vector<VertexId> best;
    for (std::size_t k = 1; k <= cands.size() && best.empty(); ++k) {
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        VertexSet u = base.empty_set();
        for (auto i : pick) u |= parts[cands[i]];
        if (index.key(u) == pv.class_key) {
          for (auto i : pick) best.push_back(cands[i]);
          break;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == cands.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    std::sort(best.begin(), best.end(), [&](VertexId x, VertexId y) { return parts[x] < parts[y]; });
    pv.layer = best.size();
    pv.decomposition = best;
    std::string name;
    for (std::size_t i = 0; i < best.size(); ++i) {
      if (i > 0) name += "∪";
      name += part_name(best[i]);
    }
    pv.display_name = name;
  }
  return out;
}

CoverResult maximal_essential_subgraph(const CoverResult& cover) {
  const VertexSet core = essential_core(cover.graph);
  if (core.empty()) fail(ErrorCode::EmptyAfterTrim, "cover has no essential part");
  CoverResult out = restrict_cover(cover, core, cover.kind);
  for (auto& v : out.vertices) v.flags.essential_part = true;
  return out;
}

ConditionStar condition_star(const LabelledGraph& g, const CoverOptions& opts) {
  const BothCovers both = build_both(g, opts);
  const CoverResult ess = maximal_essential_subgraph(both.past);
  ConditionStar out;
  for (std::size_t v = 0; v < both.krieger.vertices.size(); ++v) {
    const auto& key = both.krieger.vertices[v].class_key;
    if (!ess.find(key)) {
      out.witness = key;
      out.witness_name = both.krieger.graph.vertex_name(static_cast<VertexId>(v));
      out.witness_in_krieger = true;
      return out;
    }
  }
  for (std::size_t v = 0; v < ess.vertices.size(); ++v) {
    const auto& key = ess.vertices[v].class_key;
    if (!both.krieger.find(key)) {
      out.witness = key;
      out.witness_name = ess.graph.vertex_name(static_cast<VertexId>(v));
      return out;
    }
  }
  out.holds = true;
  return out;
}

CoverResult multiplicity_set_cover(const LabelledGraph& g, const CoverOptions& opts) {
  const CoverResult fischer = fischer_cover(g, opts);
  auto base = std::make_shared<const LabelledGraph>(fischer.graph);
  const LabelledGraph& f = *base;
  LanguageIndex index(f, opts.subset_cap);
  const MonoidExploration m = relation_monoid(f, index, opts.monoid_cap);

  std::unordered_map<VertexSet, std::uint32_t> label_of;
  std::vector<VertexSet> domains;
  std::vector<std::uint32_t> labels;
  for (const auto& r : m.relations) {
    VertexSet d = r.domain(f);
    auto [it, inserted] = label_of.emplace(d, static_cast<std::uint32_t>(domains.size()));
    if (inserted) domains.push_back(std::move(d));
    labels.push_back(it->second);
  }

  struct Entry {
    VertexSet set;
    Word prefix, period;
  };
  std::vector<Entry> entries;
  std::unordered_set<VertexSet> have;
  for (VertexId v = 0; v < f.vertex_count(); ++v) {
    entries.push_back(Entry{f.singleton(v), {}, {}});
    have.insert(f.singleton(v));
  }
  for (const auto& s : stable_labels(m, labels)) {
    const VertexSet& d = domains[s.label];
    if (have.insert(d).second) {
      entries.push_back(Entry{d, m.words[s.relation], s.period});
    } else {
      for (auto& e : entries) {
        if (e.set == d && e.period.empty()) {
          e.prefix = m.words[s.relation];
          e.period = s.period;
        }
      }
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.set.count() < b.set.count(); });

  std::vector<std::string> fischer_names;
  for (VertexId v = 0; v < f.vertex_count(); ++v) {
    const VertexSet& rep = fischer.vertices[v].representative;
    std::string name = f.vertex_name(v);
    if (rep.count() == 1) rep.for_each([&](VertexId u) { name = g.vertex_name(u); });
    fischer_names.push_back(std::move(name));
  }
  std::unordered_map<VertexSet, VertexId> vertex_of;
  std::vector<std::string> names;
  for (const auto& e : entries) {
    vertex_of.emplace(e.set, static_cast<VertexId>(names.size()));
    std::string name = "{";
    e.set.for_each([&](VertexId v) {
      if (name.size() > 1) name += ',';
      name += fischer_names[v];
    });
    names.push_back(name + "}");
  }
  names = unique_names(std::move(names));
  std::vector<Edge> edges;
  for (VertexId v = 0; v < entries.size(); ++v) {
    for (Symbol a = 0; a < f.alphabet().size(); ++a) {
      VertexSet pre = f.prepend(a, entries[v].set);
      if (pre.empty()) continue;
      auto it = vertex_of.find(pre);
      if (it == vertex_of.end()) fail(ErrorCode::Internal, "ray sets are not closed under prepending");
      edges.push_back(Edge{it->second, a, v});
    }
  }

  CoverResult out;
  out.kind = CoverKind::Multiplicity;
  out.base = base;
  out.graph = LabelledGraph::from_indexed(cover_name(g, CoverKind::Multiplicity), names, f.alphabet().symbols(),
                                          std::move(edges));
  for (VertexId v = 0; v < entries.size(); ++v) {
    CoverVertex cv;
    cv.class_key = index.key(entries[v].set);
    cv.representative = entries[v].set;
    cv.ray_prefix = entries[v].prefix;
    cv.ray_period = entries[v].period;
    cv.layer = entries[v].set.count();
    cv.display_name = out.graph.vertex_name(v);
    cv.flags.krieger = !entries[v].period.empty();
    cv.flags.in_fischer_top = entries[v].set.count() == 1;
    out.vertices.push_back(std::move(cv));
  }
  mark_essential(out);
  if (opts.verify) verify_cover(out);
  return out;
}

std::optional<LabelledGraph> derived_shift_presentation(const CoverResult& multiplicity) {
  VertexSet keep = multiplicity.graph.empty_set();
  for (VertexId v = 0; v < multiplicity.vertices.size(); ++v) {
    if (multiplicity.vertices[v].layer.value_or(0) > 1) keep.set(v);
  }
  if (keep.empty()) return std::nullopt;
  const LabelledGraph upper = induced_subgraph(multiplicity.graph, keep, false);
  const VertexSet core = essential_core(upper);
  if (core.empty()) return std::nullopt;
  LabelledGraph out = induced_subgraph(upper, core, false);
  return LabelledGraph::from_indexed("derived", out.vertex_names(), out.alphabet().symbols(),
                                     std::vector<Edge>(out.edges().begin(), out.edges().end()));
}

std::optional<LabelledGraph> derived_shift_presentation(const LabelledGraph& g,
                                                        const CoverOptions& opts) {
  return derived_shift_presentation(multiplicity_set_cover(g, opts));
}

}  // namespace soficshift
