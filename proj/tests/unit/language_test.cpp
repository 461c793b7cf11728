#include <algorithm>
#include <numeric>
#include <thread>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "seed.hpp"
#include "soficshift/constructions.hpp"
#include "soficshift/graph_io.hpp"
#include "soficshift/graph_ops.hpp"
#include "soficshift/language.hpp"

namespace soficshift {
namespace {

using testing::w;

std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; out[i].size() < max_len; ++i) {
    for (Symbol a = 0; a < k; ++a) {
      Word next = out[i];
      next.push_back(a);
      out.push_back(std::move(next));
    }
  }
  return out;
}

DeterministicAcceptor random_dfa(std::mt19937_64& rng) {
  DeterministicAcceptor d;
  d.alphabet_size = 1 + rng() % 3;
  d.state_count = 1 + rng() % 6;
  d.start = static_cast<std::int32_t>(rng() % d.state_count);
  for (std::size_t i = 0; i < d.state_count * d.alphabet_size; ++i) {
    const auto r = rng() % (d.state_count + 2);
    d.transitions.push_back(r >= d.state_count ? -1 : static_cast<std::int32_t>(r));
  }
  return d;
}

DeterministicAcceptor renumbered(const DeterministicAcceptor& d, std::mt19937_64& rng) {
  std::vector<std::int32_t> perm(d.state_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  DeterministicAcceptor out = d;
  out.start = perm[d.start];
  for (std::size_t s = 0; s < d.state_count; ++s) {
    for (Symbol a = 0; a < d.alphabet_size; ++a) {
      const auto t = d.next(static_cast<std::int32_t>(s), a);
      out.transitions[perm[s] * d.alphabet_size + a] = t < 0 ? -1 : perm[t];
    }
  }
  return out;
}

TEST(Minimize, PreservesLanguageAndIsCanonical) {
  auto rng = testing::seeded_rng("minimize_random");
  for (int i = 0; i < 500; ++i) {
    const auto d = random_dfa(rng);
    const auto m = minimize(d);
    ASSERT_LE(m.state_count, d.state_count);
    const std::size_t len = d.state_count + 1;
    for (const Word& word : all_words(d.alphabet_size, len)) {
      ASSERT_EQ(m.accepts(word), d.accepts(word));
    }
    ASSERT_EQ(minimize(m).transitions, m.transitions);
    const auto again = minimize(renumbered(d, rng));
    ASSERT_EQ(again.transitions, m.transitions);
    ASSERT_EQ(again.start, m.start);
  }
}

TEST(Minimize, StatesArePairwiseDistinguishable) {
  auto rng = testing::seeded_rng("minimize_distinct");
  for (int i = 0; i < 300; ++i) {
    const auto m = minimize(random_dfa(rng));
    const auto words = all_words(m.alphabet_size, m.state_count);
    auto run = [&](std::int32_t s, const Word& word) {
      for (Symbol a : word) {
        if (s < 0) break;
        s = m.next(s, a);
      }
      return s >= 0;
    };
    for (std::int32_t p = 0; p < static_cast<std::int32_t>(m.state_count); ++p) {
      for (std::int32_t q = p + 1; q < static_cast<std::int32_t>(m.state_count); ++q) {
        const bool distinguished = std::any_of(words.begin(), words.end(), [&](const Word& word) {
          return run(p, word) != run(q, word);
        });
        ASSERT_TRUE(distinguished) << "states " << p << " and " << q;
      }
    }
  }
}

void expect_acceptor_matches(const LabelledGraph& g, const VertexSet& u, std::size_t len) {
  const auto acceptor = predecessor_acceptor(g, u);
  const auto words = oracle::predecessor_words(g, oracle::to_mask(u), len);
  for (const Word& word : all_words(g.alphabet().size(), len)) {
    Word reversed(word.rbegin(), word.rend());
    EXPECT_EQ(acceptor.accepts(reversed), words.count(word) == 1) << g.word_text(word);
  }
}

TEST(PredecessorAcceptor, EvenShiftAndThreeCharge) {
  const auto even = even_shift();
  expect_acceptor_matches(even, even.vertex_set({"A"}), 6);
  expect_acceptor_matches(even, even.vertex_set({"B"}), 6);
  const auto c3 = fixture("3cc");
  expect_acceptor_matches(c3, c3.vertex_set({"u"}), 6);
  expect_acceptor_matches(c3, c3.vertex_set({"v", "x"}), 6);
}

TEST(PredecessorAcceptor, AllVerticesAcceptsEveryFactor) {
  const auto c3 = fixture("3cc");
  const auto acceptor = predecessor_acceptor(c3, c3.all_vertices());
  for (const Word& word : oracle::factor_words(c3, 6)) {
    EXPECT_TRUE(acceptor.accepts(Word(word.rbegin(), word.rend())));
  }
}

TEST(PredecessorAcceptor, CapIsEnforced) {
  const auto g = fixture("ex52_fischer");
  EXPECT_ERROR(StateCapExceeded, predecessor_acceptor(g, g.singleton(0), 2));
}

TEST(PredClasses, EvenShift) {
  const auto g = even_shift();
  const auto a = g.vertex_set({"A"}), ab = g.all_vertices();
  EXPECT_TRUE(pred_equal(g, a, a));
  EXPECT_FALSE(pred_equal(g, ab, a));
  EXPECT_TRUE(pred_subset(g, a, ab));
  EXPECT_FALSE(pred_subset(g, ab, a));
  EXPECT_EQ(class_key(g, a), class_key(g, g.vertex_set({"A"})));
  EXPECT_NE(class_key(g, a), class_key(g, g.vertex_set({"B"})));
}

TEST(PredClasses, EverySubsetOfThreeCharge) {
  const auto g = fixture("3cc");
  for (oracle::Mask x = 1; x < 16; ++x) {
    for (oracle::Mask y = 1; y < 16; ++y) {
      const auto r = oracle::pred_relation(g, x, y);
      const auto kx = class_key(g, oracle::to_set(g, x)), ky = class_key(g, oracle::to_set(g, y));
      ASSERT_EQ(kx == ky, r.u_in_v && r.v_in_u);
      ASSERT_EQ(key_subset(kx, ky), r.u_in_v);
    }
  }
}

TEST(PredClasses, KeysAgreeWithPairOracleOnRandomGraphs) {
  auto rng = testing::seeded_rng("keys_vs_pairs");
  for (int i = 0; i < 300; ++i) {
    const auto g = testing::random_essential_graph(rng, {.max_vertices = 5, .max_symbols = 3});
    const oracle::Mask full = oracle::all_vertices(g);
    for (int j = 0; j < 10; ++j) {
      const oracle::Mask x = rng() & full, y = rng() & full;
      const auto r = oracle::pred_relation(g, x, y);
      const auto sx = oracle::to_set(g, x), sy = oracle::to_set(g, y);
      ASSERT_EQ(pred_equal(g, sx, sy), r.u_in_v && r.v_in_u) << serialize_graph(g);
      ASSERT_EQ(pred_subset(g, sx, sy), r.u_in_v) << serialize_graph(g);
    }
  }
}

TEST(WordPresentable, Examples) {
  const auto g = even_shift();
  EXPECT_TRUE(word_presentable(g, Word{}));
  EXPECT_FALSE(word_presentable(g, w(g, "101")));
  EXPECT_TRUE(word_presentable(g, w(g, "1001")));
  EXPECT_FALSE(word_presentable(g, std::vector<std::string>{"2"}));
}

TEST(WordPresentable, AgreesWithPathSearch) {
  auto rng = testing::seeded_rng("presentable_oracle");
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_essential_graph(rng, {.max_vertices = 5, .max_symbols = 2});
    const auto words = oracle::factor_words(g, 6);
    for (const Word& word : all_words(g.alphabet().size(), 6)) {
      ASSERT_EQ(word_presentable(g, word), words.count(word) == 1);
    }
  }
}

TEST(LanguageDifference, FixtureExamples) {
  EXPECT_TRUE(shift_language_equal(even_shift(), even_shift()));
  EXPECT_TRUE(shift_language_equal(fixture("2inv_left_fischer"), fixture("2inv_right_fischer")));

  const auto g = fixture("gfc_justifying");
  auto keep = g.all_vertices();
  keep.reset(g.vertex("P"));
  const auto without = induced_subgraph(g, keep);
  EXPECT_FALSE(shift_language_equal(g, without));

  const auto diff = language_difference(even_shift(), fixture("golden_mean"));
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(*diff, (std::vector<std::string>{"1", "1"}));
}

std::set<std::vector<std::string>> named_words(const LabelledGraph& g, std::size_t len) {
  std::set<std::vector<std::string>> out;
  for (const Word& word : oracle::factor_words(g, len)) {
    std::vector<std::string> names;
    for (Symbol a : word) names.push_back(g.alphabet().symbols()[a]);
    out.insert(names);
  }
  return out;
}

TEST(LanguageDifference, ShortestWitnessAgreesWithEnumeration) {
  auto rng = testing::seeded_rng("language_difference");
  int differing = 0;
  for (int i = 0; i < 200; ++i) {
    const testing::GraphShape shape{.max_vertices = 3, .max_symbols = 2, .density = 0.4};
    const auto a = testing::random_essential_graph(rng, shape);
    const auto b = testing::random_essential_graph(rng, shape);
    const auto diff = language_difference(a, b);
    const std::size_t len = 7;
    const auto wa = named_words(a, len), wb = named_words(b, len);
    std::optional<std::size_t> shortest;
    for (const auto& word : wa) {
      if (!wb.count(word) && (!shortest || word.size() < *shortest)) shortest = word.size();
    }
    for (const auto& word : wb) {
      if (!wa.count(word) && (!shortest || word.size() < *shortest)) shortest = word.size();
    }
    if (!diff) {
      ASSERT_FALSE(shortest.has_value()) << serialize_graph(a) << serialize_graph(b);
      continue;
    }
    ++differing;
    ASSERT_NE(word_presentable(a, *diff), word_presentable(b, *diff));
    if (shortest) ASSERT_EQ(diff->size(), *shortest);
  }
  EXPECT_GT(differing, 0);
}

TEST(LanguageIndex, MatchesUncachedAndIsThreadSafe) {
  const auto g = fixture("gfc_justifying");
  LanguageIndex index(g);
  std::vector<VertexSet> sets;
  for (oracle::Mask m = 1; m < 64; ++m) sets.push_back(oracle::to_set(g, m * 7 % 512));
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (const auto& s : sets) {
        if (!(index.key(s) == class_key(g, s))) ++mismatches;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_LE(index.cached(), sets.size());
}

}  // namespace
}  // namespace soficshift
