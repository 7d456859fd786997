// Copyright 2026 The ginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ginv/fixtures.hpp"
#include "ginv/ginv.hpp"
#include "support.hpp"

namespace ginv {
namespace {

using fixtures::fix_a;
using fixtures::fix_b;
using fixtures::fix_c;
using fixtures::fix_delta;
using fixtures::fix_refl;
using testing::arc_pairs;
using ::testing::ElementsAre;
using ::testing::Pair;

TEST(ParityClosureTest, FixC) {
  Digraph expected(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}, {1, 3}, {2, 4}});
  expected.add_arc(1, 4, 2);
  EXPECT_EQ(parity_closure(fix_c()), expected);
}

TEST(ParityClosureTest, DirectedTreeGivesTransitiveClosure) {
  const Digraph closure = parity_closure(fixtures::directed_tree());
  EXPECT_EQ(closure, Digraph(6, {{1, 2}, {1, 6}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}));
}

TEST(ParityClosureTest, EmptyDigraph) { EXPECT_EQ(parity_closure(Digraph(4)), Digraph(4)); }

TEST(ParityClosureGraphTest, LiftOfFixCHasTheDoubleEdge) {
  const MatchedBipartiteGraph plus = parity_closure_graph(lift(fix_c()));
  EXPECT_EQ(plus.off_diagonal(1, 4), 2);
  EXPECT_EQ(plus.to_multigraph().multiplicity(MatchedBipartiteGraph::bottom(1), plus.top(4)), 2);
}

TEST(ParityClosureGraphTest, K2IsFixed) {
  const MatchedBipartiteGraph k2 = lift(Digraph(1));
  EXPECT_EQ(parity_closure_graph(k2), k2);
}

TEST(ParityClosureGraphTest, CoronaOfBipartiteGraphIsFixed) {
  // Coronas correspond to digraphs with no vertex having both in- and
  // out-arcs, oriented from one colour class to the other.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 8;
    const int split = 1 + trial % (n - 1);
    Digraph d(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 1; i <= split; ++i)
      for (int j = split + 1; j <= n; ++j)
        if (coin(rng)) d.add_arc(i, j, 1 + trial % 2);
    const MatchedBipartiteGraph g = lift(d);
    EXPECT_EQ(parity_closure_graph(g), g);
  }
}

TEST(GammaTest, PaperFixtures) {
  EXPECT_EQ(gamma(fix_a()), Digraph(6, {{1, 2}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 4}}));
  EXPECT_EQ(gamma(fix_b()), Digraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  EXPECT_EQ(gamma(fix_c()), Digraph(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}}));
}

TEST(GammaTest, ParallelArcsSurviveTogether) {
  Digraph d(3);
  d.add_arc(1, 2, 3);
  d.add_arc(2, 3);
  const Digraph g = gamma(d);
  EXPECT_EQ(g.multiplicity(1, 2), 3);
  EXPECT_FALSE(g.is_simple());
}

TEST(DeltaTest, FixDeltaDropsTheDashedArcs) {
  const Digraph dd = delta(fix_delta());
  EXPECT_FALSE(dd.has_arc(1, 3));
  EXPECT_FALSE(dd.has_arc(2, 4));
  EXPECT_TRUE(is_bipartite(dd));
}

TEST(DeltaTest, FixDeltaStrictlyContainsGamma) {
  const Digraph dd = delta(fix_delta());
  EXPECT_TRUE(dd.has_arc(2, 5));
  EXPECT_FALSE(gamma(fix_delta()).has_arc(2, 5));
  EXPECT_TRUE(gamma(fix_delta()).is_subgraph_of(dd));
}

TEST(DeltaTest, BipartiteDigraphIsItsOwnDelta) {
  testing::for_each_reference_digraph([](const Digraph& d) {
    if (is_bipartite(d)) { ASSERT_EQ(delta(d), d) << format_graph(d); }
  });
}

TEST(TwoColoringTest, ColorsEveryComponentFromItsLowestVertex) {
  const auto c = two_coloring(Digraph(4, {{1, 2}, {3, 4}}));
  ASSERT_TRUE(c.has_value());
  EXPECT_NE((*c)[0], (*c)[1]);
  EXPECT_FALSE(two_coloring(Digraph(3, {{1, 2}, {2, 3}, {1, 3}})).has_value());
}

TEST(FindSigningTest, FixA) {
  const ExactMatrix inv = inverse_b(b_matrix(fix_a()));
  const auto s = find_signing(inv);
  ASSERT_TRUE(s.has_value());
  EXPECT_THAT(s->values(), ElementsAre(1, -1, -1, 1, -1, 1));
  EXPECT_TRUE(s->signs(inv));
}

TEST(FindSigningTest, FixBHasNone) { EXPECT_FALSE(find_signing(inverse_b(b_matrix(fix_b()))).has_value()); }

TEST(FindSigningTest, IdentityIsAllPlus) {
  const auto s = find_signing(ExactMatrix::identity(4));
  ASSERT_TRUE(s.has_value());
  EXPECT_THAT(s->values(), ElementsAre(1, 1, 1, 1));
}

TEST(SigningTest, RejectsNonSigns) { EXPECT_THROW(Signing({1, 0}), std::invalid_argument); }

TEST(ReflexiveTest, Examples) {
  EXPECT_TRUE(is_reflexive(fix_refl()));
  EXPECT_FALSE(find_signing(inverse_b(b_matrix(fix_refl()))).has_value());
  EXPECT_TRUE(is_reflexive(Digraph(3, {{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_reflexive(Digraph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})));
  EXPECT_TRUE(is_reflexive(fix_a()));
  EXPECT_TRUE(is_reflexive(fix_c()));
}

// ---------------------------------------------------------------------------
// Properties over the exhaustive families.

TEST(InversionPropertyTest, GammaSitsInsideDAndItsClosure) {
  testing::for_each_small_digraph([](const Digraph& d) {
    const Digraph g = gamma(d);
    ASSERT_TRUE(g.is_subgraph_of(d));
    ASSERT_TRUE(g.is_subgraph_of(parity_closure(d))) << format_graph(d);
  });
}

TEST(InversionPropertyTest, SignableImpliesBipartiteGammaAndDelta) {
  testing::for_each_small_digraph([](const Digraph& d) {
    const Digraph g = gamma(d);
    const Digraph dd = delta(d);
    ASSERT_TRUE(g.is_subgraph_of(dd));
    ASSERT_TRUE(dd.is_subgraph_of(d));
    if (find_signing(inverse_b(b_matrix(d)))) {
      ASSERT_TRUE(is_bipartite(g)) << format_graph(d);
      ASSERT_TRUE(is_bipartite(dd)) << format_graph(d);
    }
  });
}

TEST(InversionPropertyTest, BipartiteDigraphIsSignableAndInsideItsClosure) {
  testing::for_each_small_digraph([](const Digraph& d) {
    if (!is_bipartite(d)) return;
    ASSERT_TRUE(find_signing(inverse_b(b_matrix(d))).has_value()) << format_graph(d);
    ASSERT_TRUE(d.is_subgraph_of(parity_closure(d))) << format_graph(d);
  });
}

TEST(InversionPropertyTest, DoubleClosureOfSignableIsIdentity) {
  int signable = 0;
  testing::for_each_small_digraph([&](const Digraph& d) {
    if (!find_signing(inverse_b(b_matrix(d)))) return;
    ++signable;
    ASSERT_EQ(parity_closure(parity_closure(d)), d) << format_graph(d);
  });
  EXPECT_GT(signable, 500);
}

TEST(InversionPropertyTest, ClosureLiftHasAUniquePerfectMatching) {
  testing::for_each_small_digraph([](const Digraph& d) {
    const Digraph closure = parity_closure(d);
    ASSERT_EQ(reduce(lift(closure).to_multigraph()).digraph, closure);
  });
}

void expect_signing_matches_oracle(const Digraph& d) {
  const ExactMatrix inv = inverse_b(b_matrix(d));
  const auto fast = find_signing(inv);
  const auto slow = oracle::exhaustive_signing(inv);
  ASSERT_EQ(fast.has_value(), slow.has_value()) << format_graph(d);
  if (fast) {
    ASSERT_TRUE(fast->signs(inv));
    ASSERT_EQ((*fast)[1], 1);
  }
}

TEST(InversionPropertyTest, FindSigningAgreesWithExhaustiveSearch) {
  testing::for_each_small_digraph(expect_signing_matches_oracle);
  // Larger instances are sampled from sparse digraphs and from bipartite
  // ones so that both outcomes are well represented up to ten vertices.
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + trial % 5;
    Digraph d = testing::random_digraph(rng, n, 0.15 + 0.05 * (trial % 4), 2);
    if (trial % 3 == 0) {
      Digraph bip(n);
      for (const auto& a : d.arcs())
        if ((a.from + a.to) % 2 == 1) bip.add_arc(a.from, a.to, a.multiplicity);
      d = bip;
    }
    expect_signing_matches_oracle(d);
  }
}

TEST(InversionPropertyTest, ArcPairsHelperMatchesArcs) {
  EXPECT_THAT(arc_pairs(Digraph(3, {{2, 3}, {1, 2}})), ElementsAre(Pair(1, 2), Pair(2, 3)));
}

}  // namespace
}  // namespace ginv
