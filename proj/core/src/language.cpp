#include "soficshift/language.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "soficshift/error.hpp"

namespace soficshift {

bool DeterministicAcceptor::accepts(std::span<const Symbol> word) const {
  std::int32_t s = start;
  for (Symbol a : word) {
    if (s < 0 || a >= alphabet_size) return false;
    s = next(s, a);
  }
  return s >= 0;
}

DeterministicAcceptor canonicalize(const DeterministicAcceptor& dfa) {
  const std::size_t k = dfa.alphabet_size;
  DeterministicAcceptor out;
  out.alphabet_size = k;
  if (dfa.state_count == 0 || dfa.start < 0) return out;
  std::vector<std::int32_t> number(dfa.state_count, -1);
  std::vector<std::int32_t> order{dfa.start};
  number[dfa.start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const auto t = dfa.next(order[i], a);
      if (t >= 0 && number[t] < 0) {
        number[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  out.state_count = order.size();
  out.start = 0;
  out.transitions.assign(order.size() * k, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const auto t = dfa.next(order[i], a);
      out.transitions[i * k + a] = t < 0 ? -1 : number[t];
    }
  }
  return out;
}

namespace {

// Refinable partition over states 0..n-1 (Valmari-Lehtinen layout).
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) elems_[i] = loc_[i] = static_cast<std::uint32_t>(i);
    if (n > 0) {
      first_.push_back(0);
      end_.push_back(static_cast<std::uint32_t>(n));
      mid_.push_back(0);
    }
  }

  std::size_t blocks() const noexcept { return first_.size(); }
  std::uint32_t block_of(std::uint32_t s) const noexcept { return block_[s]; }
  std::size_t size(std::uint32_t b) const noexcept { return end_[b] - first_[b]; }
  std::span<const std::uint32_t> members(std::uint32_t b) const {
    return std::span<const std::uint32_t>(elems_).subspan(first_[b], size(b));
  }

  void mark(std::uint32_t s) {
    const auto b = block_[s];
    const auto i = loc_[s];
    if (i < mid_[b]) return;
    const auto j = mid_[b]++;
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
    if (j == first_[b]) touched_.push_back(b);
  }

  /// Splits every touched block into marked / unmarked parts. Returns pairs
  /// (old block, new block) for blocks that actually split.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> split() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto b : touched_) {
      const auto m = mid_[b];
      if (m == end_[b]) {
        mid_[b] = first_[b];
        continue;
      }
      const auto nb = static_cast<std::uint32_t>(first_.size());
      first_.push_back(first_[b]);
      end_.push_back(m);
      mid_.push_back(first_[b]);
      first_[b] = m;
      mid_[b] = m;
      for (auto i = first_[nb]; i < end_[nb]; ++i) block_[elems_[i]] = nb;
      out.emplace_back(b, nb);
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<std::uint32_t> elems_, loc_, block_;
  std::vector<std::uint32_t> first_, end_, mid_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

DeterministicAcceptor minimize(const DeterministicAcceptor& input) {
  const DeterministicAcceptor dfa = canonicalize(input);
  const std::size_t k = dfa.alphabet_size;
  const std::size_t live = dfa.state_count;
  if (live == 0) return dfa;

  // Complete the automaton with an explicit dead state `live`.
  const std::size_t n = live + 1;
  const auto dead = static_cast<std::uint32_t>(live);
  auto target = [&](std::size_t s, Symbol a) -> std::uint32_t {
    if (s == dead) return dead;
    const auto t = dfa.transitions[s * k + a];
    return t < 0 ? dead : static_cast<std::uint32_t>(t);
  };
  // inverse[a] in CSR form
  std::vector<std::vector<std::uint32_t>> inv_offsets(k), inv_list(k);
  for (Symbol a = 0; a < k; ++a) {
    auto& off = inv_offsets[a];
    auto& lst = inv_list[a];
    off.assign(n + 1, 0);
    for (std::size_t s = 0; s < n; ++s) ++off[target(s, a) + 1];
    for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
    lst.assign(n, 0);
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    for (std::size_t s = 0; s < n; ++s) lst[fill[target(s, a)]++] = static_cast<std::uint32_t>(s);
  }

  Partition p(n);
  p.mark(dead);
  p.split();

  std::deque<std::pair<std::uint32_t, Symbol>> work;
  std::vector<std::vector<bool>> queued;  // [block][symbol]
  auto ensure = [&](std::size_t blocks) {
    while (queued.size() < blocks) queued.emplace_back(k, false);
  };
  ensure(p.blocks());
  auto enqueue = [&](std::uint32_t b, Symbol a) {
    if (!queued[b][a]) {
      queued[b][a] = true;
      work.emplace_back(b, a);
    }
  };
  if (p.blocks() == 2) {
    const std::uint32_t smaller = p.size(0) <= p.size(1) ? 0 : 1;
    for (Symbol a = 0; a < k; ++a) enqueue(smaller, a);
  }

  std::vector<std::uint32_t> splitter;
  while (!work.empty()) {
    const auto [b, a] = work.front();
    work.pop_front();
    queued[b][a] = false;
    splitter.assign(p.members(b).begin(), p.members(b).end());
    for (auto t : splitter) {
      for (auto i = inv_offsets[a][t]; i < inv_offsets[a][t + 1]; ++i) p.mark(inv_list[a][i]);
    }
    for (const auto& [old_block, new_block] : p.split()) {
      ensure(p.blocks());
      for (Symbol c = 0; c < k; ++c) {
        if (queued[old_block][c]) {
          enqueue(new_block, c);
        } else {
          enqueue(p.size(new_block) <= p.size(old_block) ? new_block : old_block, c);
        }
      }
    }
  }

  const auto dead_block = p.block_of(dead);
  DeterministicAcceptor out;
  out.alphabet_size = k;
  std::vector<std::int32_t> number(p.blocks(), -1);
  std::int32_t next = 0;
  for (std::uint32_t b = 0; b < p.blocks(); ++b) {
    if (b != dead_block) number[b] = next++;
  }
  out.state_count = static_cast<std::size_t>(next);
  out.start = number[p.block_of(static_cast<std::uint32_t>(dfa.start))];
  out.transitions.assign(out.state_count * k, -1);
  for (std::uint32_t b = 0; b < p.blocks(); ++b) {
    if (b == dead_block) continue;
    const auto rep = p.members(b)[0];
    for (Symbol a = 0; a < k; ++a) {
      out.transitions[static_cast<std::size_t>(number[b]) * k + a] = number[p.block_of(target(rep, a))];
    }
  }
  return canonicalize(out);
}

PredecessorClassKey::PredecessorClassKey(DeterministicAcceptor canonical)
    : acceptor_(std::move(canonical)) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(acceptor_.alphabet_size);
  mix(acceptor_.state_count);
  for (auto t : acceptor_.transitions) mix(static_cast<std::uint32_t>(t));
  digest_ = h;
}

std::string PredecessorClassKey::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest_));
  return buf;
}

bool operator<(const PredecessorClassKey& a, const PredecessorClassKey& b) noexcept {
  if (a.acceptor_.state_count != b.acceptor_.state_count) {
    return a.acceptor_.state_count < b.acceptor_.state_count;
  }
  if (a.acceptor_.alphabet_size != b.acceptor_.alphabet_size) {
    return a.acceptor_.alphabet_size < b.acceptor_.alphabet_size;
  }
  return a.acceptor_.transitions < b.acceptor_.transitions;
}

DeterministicAcceptor predecessor_acceptor(const LabelledGraph& g, const VertexSet& u,
                                           std::size_t cap) {
  if (u.universe() != g.vertex_count() || (u.owner() != 0 && u.owner() != g.id())) {
    fail(ErrorCode::GraphMismatch, "vertex set belongs to a different graph");
  }
  const std::size_t k = g.alphabet().size();
  DeterministicAcceptor dfa;
  dfa.alphabet_size = k;
  if (u.empty()) return dfa;

  std::unordered_map<VertexSet, std::int32_t> index;
  std::vector<VertexSet> states{u};
  index.emplace(u, 0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      VertexSet t = g.prepend(a, states[i]);
      std::int32_t id = -1;
      if (!t.empty()) {
        auto [it, inserted] = index.emplace(t, static_cast<std::int32_t>(states.size()));
        if (inserted) {
          if (states.size() >= cap) {
            fail(ErrorCode::StateCapExceeded,
                 "predecessor subset construction exceeded " + std::to_string(cap) + " states");
          }
          states.push_back(std::move(t));
        }
        id = it->second;
      }
      dfa.transitions.push_back(id);
    }
  }
  dfa.state_count = states.size();
  dfa.start = 0;
  return minimize(dfa);
}

PredecessorClassKey class_key(const LabelledGraph& g, const VertexSet& u, std::size_t cap) {
  return PredecessorClassKey(predecessor_acceptor(g, u, cap));
}

bool pred_equal(const LabelledGraph& g, const VertexSet& u, const VertexSet& v, std::size_t cap) {
  return class_key(g, u, cap) == class_key(g, v, cap);
}

bool key_subset(const PredecessorClassKey& a, const PredecessorClassKey& b) {
  const auto& x = a.acceptor();
  const auto& y = b.acceptor();
  if (x.alphabet_size != y.alphabet_size) {
    fail(ErrorCode::GraphMismatch, "class keys over different alphabets");
  }
  if (x.state_count == 0) return true;
  if (y.state_count == 0) return false;
  const std::size_t k = x.alphabet_size;
  std::set<std::pair<std::int32_t, std::int32_t>> seen{{x.start, y.start}};
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{{x.start, y.start}};
  while (!stack.empty()) {
    const auto [s, t] = stack.back();
    stack.pop_back();
    for (Symbol a = 0; a < k; ++a) {
      const auto s2 = x.next(s, a);
      if (s2 < 0) continue;
      const auto t2 = y.next(t, a);
      if (t2 < 0) return false;
      if (seen.emplace(s2, t2).second) stack.emplace_back(s2, t2);
    }
  }
  return true;
}

bool pred_subset(const LabelledGraph& g, const VertexSet& u, const VertexSet& v, std::size_t cap) {
  return key_subset(class_key(g, u, cap), class_key(g, v, cap));
}

bool word_presentable(const LabelledGraph& g, std::span<const Symbol> w) {
  VertexSet current = g.all_vertices();
  for (Symbol a : w) {
    if (a >= g.alphabet().size()) return false;
    current = g.advance(a, current);
    if (current.empty()) return false;
  }
  return !g.empty() || w.empty();
}

bool word_presentable(const LabelledGraph& g, std::span<const std::string> w) {
  auto word = g.word(w);
  return word && word_presentable(g, *word);
}

std::optional<std::vector<std::string>> language_difference(const LabelledGraph& g1,
                                                            const LabelledGraph& g2,
                                                            std::size_t cap) {
  std::vector<std::string> names = g1.alphabet().symbols();
  for (const auto& s : g2.alphabet().symbols()) names.push_back(s);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const std::size_t k = names.size();
  std::vector<std::optional<Symbol>> in1(k), in2(k);
  for (std::size_t i = 0; i < k; ++i) {
    in1[i] = g1.alphabet().find(names[i]);
    in2[i] = g2.alphabet().find(names[i]);
  }

  using State = std::pair<VertexSet, VertexSet>;
  struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
      return s.first.hash() * 31 + s.second.hash();
    }
  };
  std::unordered_map<State, std::size_t, StateHash> index;
  std::vector<State> states;
  std::vector<std::pair<std::size_t, std::uint32_t>> parent;  // (state, symbol)
  states.emplace_back(g1.all_vertices(), g2.all_vertices());
  parent.emplace_back(0, 0);
  index.emplace(states[0], 0);

  auto word_to = [&](std::size_t s, std::uint32_t last) {
    std::vector<std::string> w{names[last]};
    while (s != 0) {
      w.push_back(names[parent[s].second]);
      s = parent[s].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::uint32_t a = 0; a < k; ++a) {
      VertexSet s1 = in1[a] ? g1.advance(*in1[a], states[i].first) : g1.empty_set();
      VertexSet s2 = in2[a] ? g2.advance(*in2[a], states[i].second) : g2.empty_set();
      const bool e1 = s1.empty();
      const bool e2 = s2.empty();
      if (e1 != e2) return word_to(i, a);
      if (e1) continue;
      State next{std::move(s1), std::move(s2)};
      if (index.count(next)) continue;
      if (states.size() >= cap) {
        fail(ErrorCode::StateCapExceeded,
             "language comparison exceeded " + std::to_string(cap) + " states");
      }
      index.emplace(next, states.size());
      states.push_back(std::move(next));
      parent.emplace_back(i, a);
    }
  }
  return std::nullopt;
}

bool shift_language_equal(const LabelledGraph& g1, const LabelledGraph& g2, std::size_t cap) {
  return !language_difference(g1, g2, cap).has_value();
}

LanguageIndex::LanguageIndex(const LabelledGraph& g, std::size_t cap) : graph_(&g), cap_(cap) {}

PredecessorClassKey LanguageIndex::key(const VertexSet& u) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = keys_.find(u); it != keys_.end()) return it->second;
  }
  PredecessorClassKey k = class_key(*graph_, u, cap_);
  std::lock_guard lock(mutex_);
  return keys_.emplace(u, std::move(k)).first->second;
}

std::size_t LanguageIndex::cached() const {
  std::lock_guard lock(mutex_);
  return keys_.size();
}

}  // namespace soficshift
