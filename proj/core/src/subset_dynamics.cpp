#include "soficshift/subset_dynamics.hpp"

#include <algorithm>
#include <unordered_map>

#include "soficshift/error.hpp"
#include "soficshift/graph_ops.hpp"

namespace soficshift {

std::int32_t SubsetAutomaton::find(const VertexSet& s) const {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i] == s) return static_cast<std::int32_t>(i);
  }
  return -1;
}

SubsetAutomaton reachable_subsets(const LabelledGraph& g, std::size_t cap) {
  SubsetAutomaton out;
  const std::size_t k = g.alphabet().size();
  out.alphabet_size = k;
  if (g.empty()) return out;
  std::unordered_map<VertexSet, std::int32_t> index;
  out.subsets.push_back(g.all_vertices());
  out.witness.emplace_back();
  index.emplace(out.subsets[0], 0);
  for (std::size_t i = 0; i < out.subsets.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      VertexSet t = g.prepend(a, out.subsets[i]);
      if (t.empty()) {
        out.transitions.push_back(-1);
        continue;
      }
      auto [it, inserted] = index.emplace(t, static_cast<std::int32_t>(out.subsets.size()));
      if (inserted) {
        if (out.subsets.size() >= cap) {
          fail(ErrorCode::StateCapExceeded,
               "subset automaton exceeded " + std::to_string(cap) + " states");
        }
        Word w{a};
        w.insert(w.end(), out.witness[i].begin(), out.witness[i].end());
        out.subsets.push_back(std::move(t));
        out.witness.push_back(std::move(w));
      }
      out.transitions.push_back(it->second);
    }
  }
  return out;
}

TransitionRelation::TransitionRelation(std::size_t n)
    : n_(n), stride_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

TransitionRelation TransitionRelation::identity(std::size_t n) {
  TransitionRelation r(n);
  for (VertexId v = 0; v < n; ++v) r.set(v, v);
  return r;
}

TransitionRelation TransitionRelation::generator(const LabelledGraph& g, Symbol a) {
  TransitionRelation r(g.vertex_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto& words = g.successors(a, u).words();
    std::copy(words.begin(), words.end(), r.bits_.begin() + static_cast<std::ptrdiff_t>(u * r.stride_));
  }
  return r;
}

TransitionRelation TransitionRelation::of_word(const LabelledGraph& g, std::span<const Symbol> w) {
  TransitionRelation r = identity(g.vertex_count());
  for (Symbol a : w) r = r.compose(generator(g, a));
  return r;
}

bool TransitionRelation::test(VertexId u, VertexId v) const {
  return (bits_.at(u * stride_ + v / 64) >> (v % 64)) & 1U;
}

void TransitionRelation::set(VertexId u, VertexId v) {
  bits_.at(u * stride_ + v / 64) |= std::uint64_t{1} << (v % 64);
}

bool TransitionRelation::empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

TransitionRelation TransitionRelation::compose(const TransitionRelation& rhs) const {
  if (rhs.n_ != n_) fail(ErrorCode::GraphMismatch, "relations over different vertex sets");
  TransitionRelation out(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    std::uint64_t* dst = out.bits_.data() + u * stride_;
    const std::uint64_t* row = bits_.data() + u * stride_;
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const std::uint64_t* src = rhs.bits_.data() + v * stride_;
        for (std::size_t x = 0; x < stride_; ++x) dst[x] |= src[x];
      }
    }
  }
  return out;
}

VertexSet TransitionRelation::domain(const LabelledGraph& g) const {
  VertexSet d = g.empty_set();
  for (VertexId u = 0; u < n_; ++u) {
    const std::uint64_t* row = bits_.data() + u * stride_;
    if (std::any_of(row, row + stride_, [](std::uint64_t w) { return w != 0; })) d.set(u);
  }
  return d;
}

VertexSet TransitionRelation::row(const LabelledGraph& g, VertexId u) const {
  VertexSet r = g.empty_set();
  for (VertexId v = 0; v < n_; ++v) {
    if (test(u, v)) r.set(v);
  }
  return r;
}

std::size_t TransitionRelation::hash() const noexcept {
  std::size_t h = n_;
  for (auto w : bits_) h = h * 0x9e3779b97f4a7c15ULL + (w ^ (w >> 29));
  return h;
}

MonoidExploration relation_monoid(const LabelledGraph& g, const LanguageIndex& index,
                                  std::size_t cap) {
  MonoidExploration m;
  const std::size_t k = g.alphabet().size();
  m.alphabet_size = k;
  if (g.empty()) return m;

  std::vector<TransitionRelation> gens;
  for (Symbol a = 0; a < k; ++a) gens.push_back(TransitionRelation::generator(g, a));

  std::unordered_map<TransitionRelation, std::int32_t> seen;
  m.relations.push_back(TransitionRelation::identity(g.vertex_count()));
  m.words.emplace_back();
  seen.emplace(m.relations[0], 0);
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      TransitionRelation r = m.relations[i].compose(gens[a]);
      if (r.empty()) {
        m.transitions.push_back(-1);
        continue;
      }
      auto [it, inserted] = seen.emplace(r, static_cast<std::int32_t>(m.relations.size()));
      if (inserted) {
        if (m.relations.size() >= cap) {
          fail(ErrorCode::StateCapExceeded,
               "transition monoid exceeded " + std::to_string(cap) + " relations");
        }
        Word w = m.words[i];
        w.push_back(a);
        m.relations.push_back(std::move(r));
        m.words.push_back(std::move(w));
      }
      m.transitions.push_back(it->second);
    }
  }

  std::unordered_map<VertexSet, std::uint32_t> domain_class;
  std::unordered_map<PredecessorClassKey, std::uint32_t> key_index;
  m.domain_class.reserve(m.relations.size());
  for (const auto& r : m.relations) {
    VertexSet d = r.domain(g);
    auto it = domain_class.find(d);
    if (it == domain_class.end()) {
      PredecessorClassKey key = index.key(d);
      auto [kit, inserted] = key_index.emplace(key, static_cast<std::uint32_t>(m.keys.size()));
      if (inserted) {
        m.keys.push_back(std::move(key));
        m.key_representative.push_back(d);
      }
      it = domain_class.emplace(std::move(d), kit->second).first;
    }
    m.domain_class.push_back(it->second);
  }
  return m;
}

MonoidExploration relation_monoid(const LabelledGraph& g, std::size_t cap) {
  LanguageIndex index(g);
  return relation_monoid(g, index, cap);
}

std::vector<StableLabel> stable_labels(const MonoidExploration& m,
                                       const std::vector<std::uint32_t>& label) {
  const std::size_t n = m.size();
  const std::size_t k = m.alphabet_size;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const auto t = m.next(i, a);
      if (t >= 0 && label[static_cast<std::size_t>(t)] == label[i]) {
        arcs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(t));
      }
    }
  }
  const SccDecomposition comps = scc(n, arcs);

  const std::uint32_t label_count =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<bool> have(label_count, false);
  std::vector<StableLabel> out;
  // Components come ordered by least member, so the first cyclic component
  // seen for a label holds its earliest relation.
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    const VertexId start = comps.members[c].front();
    const auto lab = label[start];
    if (have[lab]) continue;
    have[lab] = true;

    // Shortest cycle through `start` inside its component, symbols in
    // exploration order.
    std::vector<std::int64_t> parent(n, -1);
    std::vector<Symbol> via(n, 0);
    std::vector<VertexId> queue{start};
    std::vector<bool> seen(n, false);
    Word period;
    for (std::size_t q = 0; q < queue.size() && period.empty(); ++q) {
      const VertexId v = queue[q];
      for (Symbol a = 0; a < k; ++a) {
        const auto t = m.next(v, a);
        if (t < 0 || comps.component[static_cast<std::size_t>(t)] != c) continue;
        const auto w = static_cast<VertexId>(t);
        if (w == start) {
          Word back{a};
          for (VertexId x = v; x != start; x = static_cast<VertexId>(parent[x])) back.push_back(via[x]);
          period.assign(back.rbegin(), back.rend());
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          via[w] = a;
          queue.push_back(w);
        }
      }
    }
    out.push_back(StableLabel{lab, start, std::move(period)});
  }
  std::sort(out.begin(), out.end(),
            [](const StableLabel& a, const StableLabel& b) { return a.relation < b.relation; });
  return out;
}

std::vector<KriegerClass> krieger_classes(const LabelledGraph& g, const LanguageIndex& index,
                                          std::size_t monoid_cap) {
  const MonoidExploration m = relation_monoid(g, index, monoid_cap);
  std::vector<KriegerClass> out;
  for (auto& s : stable_labels(m, m.domain_class)) {
    out.push_back(KriegerClass{m.keys[s.label], m.words[s.relation], std::move(s.period),
                               m.relations[s.relation].domain(g)});
  }
  return out;
}

std::vector<PredecessorClassKey> krieger_class_keys(const LabelledGraph& g,
                                                    std::size_t monoid_cap) {
  LanguageIndex index(g);
  std::vector<PredecessorClassKey> keys;
  for (auto& c : krieger_classes(g, index, monoid_cap)) keys.push_back(std::move(c.key));
  return keys;
}

VertexSet periodic_ray_domain(const LabelledGraph& g, std::span<const Symbol> w,
                              std::span<const Symbol> u) {
  if (u.empty()) fail(ErrorCode::InvalidRay, "ray period is empty");
  for (Symbol a : w) {
    if (a >= g.alphabet().size()) fail(ErrorCode::InvalidRay, "symbol outside the alphabet");
  }
  for (Symbol a : u) {
    if (a >= g.alphabet().size()) fail(ErrorCode::InvalidRay, "symbol outside the alphabet");
  }
  TransitionRelation r = TransitionRelation::of_word(g, w);
  const TransitionRelation step = TransitionRelation::of_word(g, u);
  std::unordered_map<TransitionRelation, std::size_t> seen;
  for (std::size_t k = 0;; ++k) {
    if (r.empty()) fail(ErrorCode::InvalidRay, "ray leaves the language");
    if (seen.count(r)) return r.domain(g);
    seen.emplace(r, k);
    r = r.compose(step);
  }
}

PredecessorClassKey periodic_ray_class(const LabelledGraph& g, std::span<const Symbol> w,
                                       std::span<const Symbol> u) {
  return class_key(g, periodic_ray_domain(g, w, u));
}

}  // namespace soficshift
