#include "qwick/diagram.hpp"

#include <gtest/gtest.h>

#include <set>

#include "qwick/errors.hpp"
#include "test_oracles.hpp"

namespace qwick {
namespace {

using testing::brute_stats;

std::vector<std::vector<Pair>> pair_lists(const std::vector<FeynmanDiagram>& ds) {
  std::vector<std::vector<Pair>> out;
  for (const auto& d : ds) out.push_back(d.pairs());
  return out;
}

TEST(GroundSet, BlocksOverlayNaturalOrder) {
  GroundSet g = GroundSet::with_blocks({2, 1, 3});
  EXPECT_EQ(g.size(), 6);
  EXPECT_TRUE(g.has_blocks());
  EXPECT_EQ(g.block_of(1), 0);
  EXPECT_EQ(g.block_of(3), 1);
  EXPECT_EQ(g.block_of(6), 2);
  EXPECT_EQ(g.lex_label(5), std::make_pair(3, 2));
  EXPECT_THROW(GroundSet::with_blocks({2, 0}), DomainError);
  EXPECT_FALSE(GroundSet(4).has_blocks());
}

TEST(FeynmanDiagram, CanonicalFormAndSingletons) {
  FeynmanDiagram d(GroundSet(10), {{8, 10}, {1, 3}, {4, 9}, {2, 6}});
  ASSERT_EQ(d.pairs().size(), 4u);
  EXPECT_EQ(d.pairs()[0], (Pair{1, 3}));
  EXPECT_EQ(d.pairs()[3], (Pair{8, 10}));
  EXPECT_EQ(d.singletons(), (std::vector<Position>{5, 7}));
  EXPECT_EQ(d.partner(6), 2);
  EXPECT_EQ(d.partner(5), 0);
  EXPECT_EQ(d, FeynmanDiagram(GroundSet(10), {{1, 3}, {2, 6}, {4, 9}, {8, 10}}));
}

TEST(FeynmanDiagram, RejectsInvalidPairs) {
  EXPECT_THROW(FeynmanDiagram(GroundSet(4), {{1, 2}, {2, 3}}), DomainError);
  EXPECT_THROW(FeynmanDiagram(GroundSet(4), {{3, 2}}), DomainError);
  EXPECT_THROW(FeynmanDiagram(GroundSet(4), {{1, 5}}), DomainError);
  EXPECT_THROW(FeynmanDiagram(GroundSet(4), {{2, 2}}), DomainError);
}

TEST(EnumerateDiagrams, SmallCases) {
  auto d0 = enumerate_diagrams(GroundSet(0));
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0[0].pairs().empty());

  auto d2 = enumerate_diagrams(GroundSet(2));
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_TRUE(d2[0].pairs().empty());
  EXPECT_EQ(d2[1].pairs(), (std::vector<Pair>{{1, 2}}));

  EXPECT_EQ(enumerate_diagrams(GroundSet(4)).size(), 10u);
}

TEST(EnumerateDiagrams, MatchesPermutationScanAndIsLexicographic) {
  for (int n = 0; n <= 8; ++n) {
    const auto lists = pair_lists(enumerate_diagrams(GroundSet(n)));
    EXPECT_EQ(static_cast<std::int64_t>(lists.size()), testing::involution_count(n)) << n;
    EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end())) << n;
    const std::set<std::vector<Pair>> unique(lists.begin(), lists.end());
    EXPECT_EQ(unique.size(), lists.size()) << "duplicates at n=" << n;
    EXPECT_EQ(unique, testing::involutions_by_permutation(n)) << n;
  }
}

TEST(EnumerateComplete, CountsAndParity) {
  auto c2 = enumerate_complete(GroundSet(2));
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0].pairs(), (std::vector<Pair>{{1, 2}}));
  EXPECT_EQ(enumerate_complete(GroundSet(4)).size(), 3u);
  EXPECT_TRUE(enumerate_complete(GroundSet(5)).empty());
  for (int n = 0; n <= 6; ++n) {
    const auto ds = enumerate_complete(GroundSet(2 * n));
    EXPECT_EQ(static_cast<std::int64_t>(ds.size()), testing::double_factorial_odd(n));
    std::int64_t nc = 0;
    for (const auto& d : ds) {
      EXPECT_TRUE(d.complete());
      nc += crossing_stats(d).crossings == 0;
    }
    EXPECT_EQ(nc, testing::catalan_number(n)) << n;
    const auto lists = pair_lists(ds);
    EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end()));
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_diagrams(GroundSet(13)), SizeLimitError);
  EXPECT_THROW(enumerate_complete(GroundSet(14)), SizeLimitError);
  EXPECT_NO_THROW(enumerate_complete(GroundSet(12)));
  EXPECT_EQ(enumerate_diagrams(GroundSet(3), 3).size(), 4u);
  EXPECT_THROW(enumerate_diagrams(GroundSet(4), 3), SizeLimitError);
  try {
    enumerate_diagrams(GroundSet(13));
  } catch (const SizeLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  }
}

TEST(Enumerate, Deterministic) {
  EXPECT_EQ(enumerate_diagrams(GroundSet(7)), enumerate_diagrams(GroundSet(7)));
  auto g = GroundSet::with_blocks({2, 3, 1});
  EXPECT_EQ(enumerate_nonlinking(g, false), enumerate_nonlinking(g, false));
}

TEST(EnumerateCompatible, Examples) {
  auto one = enumerate_compatible(SignSequence({-1, 1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].pairs(), (std::vector<Pair>{{1, 2}}));

  auto two = enumerate_compatible(SignSequence({-1, -1, 1, 1}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].pairs(), (std::vector<Pair>{{1, 3}, {2, 4}}));
  EXPECT_EQ(two[1].pairs(), (std::vector<Pair>{{1, 4}, {2, 3}}));

  SignSequence eps({-1, -1, 1, -1, -1, 1, 1, 1});
  auto many = enumerate_compatible(eps);
  ASSERT_FALSE(many.empty());
  for (const auto& d : many) {
    std::vector<Position> lefts;
    for (const Pair& p : d.pairs()) lefts.push_back(p.left);
    EXPECT_EQ(lefts, (std::vector<Position>{1, 2, 4, 5}));
  }

  EXPECT_THROW(enumerate_compatible(SignSequence({1, -1})), DomainError);
  EXPECT_THROW(enumerate_compatible(SignSequence({-1, 1, 1})), DomainError);
}

TEST(EnumerateCompatible, AgreesWithFilteredPairings) {
  for (int len = 2; len <= 8; len += 2) {
    for (const SignSequence& eps : catalan_sequences(len)) {
      std::vector<FeynmanDiagram> filtered;
      for (const auto& d : enumerate_complete(GroundSet(len))) {
        if (epsilon_of(d) == eps) filtered.push_back(d);
      }
      EXPECT_EQ(enumerate_compatible(eps), filtered);
      EXPECT_FALSE(filtered.empty());
    }
  }
}

TEST(EnumerateNonlinking, Examples) {
  auto two = enumerate_nonlinking(GroundSet::with_blocks({2, 2}), true);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].pairs(), (std::vector<Pair>{{1, 3}, {2, 4}}));
  EXPECT_EQ(two[1].pairs(), (std::vector<Pair>{{1, 4}, {2, 3}}));

  auto single = enumerate_nonlinking(GroundSet::with_blocks({4}), false);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].pairs().empty());

  for (int n = 0; n <= 6; ++n) {
    auto singles = GroundSet::with_blocks(std::vector<int>(n, 1));
    EXPECT_EQ(pair_lists(enumerate_nonlinking(singles, false)),
              pair_lists(enumerate_diagrams(GroundSet(n))));
    EXPECT_EQ(pair_lists(enumerate_nonlinking(singles, true)),
              pair_lists(enumerate_complete(GroundSet(n))));
  }
  EXPECT_THROW(enumerate_nonlinking(GroundSet(4), false), DomainError);
}

TEST(EnumerateNonlinking, MatchesFilter) {
  const std::vector<std::vector<int>> structures{{2, 1}, {2, 3}, {1, 2, 2}, {3, 3}, {2, 2, 2}};
  for (const auto& blocks : structures) {
    auto g = GroundSet::with_blocks(blocks);
    std::vector<std::vector<Pair>> expected;
    for (const auto& d : enumerate_diagrams(GroundSet(g.size()))) {
      bool links = false;
      for (const Pair& p : d.pairs()) links |= g.block_of(p.left) == g.block_of(p.right);
      if (!links) expected.push_back(d.pairs());
    }
    EXPECT_EQ(pair_lists(enumerate_nonlinking(g, false)), expected);
  }
}

TEST(CrossingStats, WorkedExample) {
  FeynmanDiagram d(GroundSet(10), {{1, 3}, {2, 6}, {4, 9}, {8, 10}});
  const CrossingStats s = crossing_stats(d);
  EXPECT_EQ(s.crossings, 3);
  ASSERT_EQ(s.per_pair.size(), 4u);
  EXPECT_EQ(s.per_pair[0].left_crossings, 0);
  EXPECT_EQ(s.per_pair[1].left_crossings, 1);
  EXPECT_EQ(s.per_pair[2].left_crossings, 1);
  EXPECT_EQ(s.per_pair[3].left_crossings, 1);
}

TEST(CrossingStats, EmptyAndDegenerate) {
  const CrossingStats empty = crossing_stats(FeynmanDiagram(GroundSet(5), {}));
  EXPECT_EQ(empty.crossings, 0);
  EXPECT_EQ(empty.degenerate_crossings, 0);
  EXPECT_EQ(empty.total_crossings, 0);
  EXPECT_EQ(empty.gap, 0);
  EXPECT_EQ(empty.a, 0);

  const CrossingStats s = crossing_stats(FeynmanDiagram(GroundSet(3), {{1, 3}}));
  EXPECT_EQ(s.gap, 1);
  EXPECT_EQ(s.crossings, 0);
  EXPECT_EQ(s.degenerate_crossings, 1);
  EXPECT_EQ(s.total_crossings, 1);
  EXPECT_EQ(s.a, 1);
}

// Every diagram up to n = 8 against the brute-force tuple scan, plus the
// structural invariants relating the statistics.
TEST(CrossingStats, ExhaustiveAgainstBruteForce) {
  for (int n = 0; n <= 8; ++n) {
    for_each_diagram(GroundSet(n), [&](const FeynmanDiagram& d) {
      const CrossingStats s = crossing_stats(d);
      const auto brute = brute_stats(n, d.pairs());
      ASSERT_EQ(s.crossings, brute.c_left);
      ASSERT_EQ(s.crossings, brute.c_right);
      ASSERT_EQ(s.degenerate_crossings, brute.d);
      ASSERT_EQ(s.gap, brute.g);
      int sum_r = 0;
      for (const PairStats& p : s.per_pair) {
        sum_r += p.right_crossings;
        ASSERT_GE(p.a(), 0);
        ASSERT_LE(p.left_crossings + p.right_crossings, p.gap);
      }
      ASSERT_EQ(sum_r, s.crossings);
      ASSERT_EQ(s.total_crossings, s.crossings + s.degenerate_crossings);
      ASSERT_EQ(s.a, s.gap - s.crossings);
      ASSERT_LE(2 * s.crossings, s.gap);
      if (d.complete()) {
        ASSERT_EQ(s.degenerate_crossings, 0);
        ASSERT_EQ(s.total_crossings, s.crossings);
      }
    });
  }
}

TEST(CrossingStats, RandomLargeDiagrams) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 15);
    auto pairs = testing::random_pairs(n, rng);
    const CrossingStats s = crossing_stats(FeynmanDiagram(GroundSet(n), pairs));
    const auto brute = brute_stats(n, pairs);
    EXPECT_EQ(s.crossings, brute.c_left);
    EXPECT_EQ(s.crossings, brute.c_right);
    EXPECT_EQ(s.degenerate_crossings, brute.d);
    EXPECT_EQ(s.gap, brute.g);
  }
}

TEST(Classify, Examples) {
  auto flags = classify(FeynmanDiagram(GroundSet(4), {{1, 2}, {3, 4}}));
  EXPECT_TRUE(flags.noncrossing);
  EXPECT_TRUE(flags.strongly_noncrossing);
  EXPECT_TRUE(flags.gap_free);

  EXPECT_FALSE(classify(FeynmanDiagram(GroundSet(4), {{1, 3}, {2, 4}})).noncrossing);

  flags = classify(FeynmanDiagram(GroundSet(3), {{1, 3}}));
  EXPECT_TRUE(flags.noncrossing);
  EXPECT_FALSE(flags.strongly_noncrossing);
  EXPECT_FALSE(flags.gap_free);
}

TEST(Classify, InclusionChain) {
  for (int n = 0; n <= 8; ++n) {
    for_each_diagram(GroundSet(n), [](const FeynmanDiagram& d) {
      const DiagramClass c = classify(d);
      if (c.gap_free) ASSERT_TRUE(c.strongly_noncrossing);
      if (c.strongly_noncrossing) ASSERT_TRUE(c.noncrossing);
    });
  }
}

TEST(CatalanCheck, Examples) {
  auto a = catalan_check(SignSequence({-1, 1}));
  EXPECT_TRUE(a.catalan);
  EXPECT_EQ(a.sigma, (std::vector<int>{0, 1}));

  auto b = catalan_check(SignSequence({1, -1}));
  EXPECT_FALSE(b.catalan);
  EXPECT_EQ(b.sigma[1], -1);

  EXPECT_TRUE(catalan_check(SignSequence({-1, -1, 1, -1, -1, 1, 1, 1})).catalan);
  EXPECT_THROW(catalan_check(SignSequence({-1, 1, 1})), DomainError);
  EXPECT_THROW(SignSequence({-1, 0}), DomainError);
}

TEST(CatalanCheck, CountsAndGenerator) {
  for (int n = 0; n <= 6; ++n) {
    int count = 0;
    for (unsigned mask = 0; mask < (1U << (2 * n)); ++mask) {
      std::vector<int> e(2 * n);
      for (int k = 0; k < 2 * n; ++k) e[k] = (mask >> k) & 1U ? 1 : -1;
      count += catalan_check(SignSequence(e)).catalan;
    }
    EXPECT_EQ(count, testing::catalan_number(n));
    EXPECT_EQ(static_cast<std::int64_t>(catalan_sequences(2 * n).size()),
              testing::catalan_number(n));
  }
  for (const auto& eps : catalan_sequences(8)) EXPECT_TRUE(catalan_check(eps).catalan);
}

TEST(EpsilonOf, Examples) {
  EXPECT_EQ(epsilon_of(FeynmanDiagram(GroundSet(2), {{1, 2}})).entries(), (std::vector<int>{-1, 1}));
  EXPECT_EQ(epsilon_of(FeynmanDiagram(GroundSet(4), {{1, 3}, {2, 4}})).entries(),
            (std::vector<int>{-1, -1, 1, 1}));
  EXPECT_EQ(epsilon_of(FeynmanDiagram(GroundSet(4), {{1, 2}, {3, 4}})).entries(),
            (std::vector<int>{-1, 1, -1, 1}));
  EXPECT_THROW(epsilon_of(FeynmanDiagram(GroundSet(3), {{1, 2}})), DomainError);
}

TEST(EpsilonOf, CompleteDiagramsAreCompatibleWithTheirSequence) {
  for (int n = 1; n <= 5; ++n) {
    for_each_complete(GroundSet(2 * n), [](const FeynmanDiagram& d) {
      const SignSequence eps = epsilon_of(d);
      ASSERT_TRUE(catalan_check(eps).catalan);
      const auto compatible = enumerate_compatible(eps);
      ASSERT_NE(std::find(compatible.begin(), compatible.end(), d), compatible.end());
    });
  }
}

}  // namespace
}  // namespace qwick
