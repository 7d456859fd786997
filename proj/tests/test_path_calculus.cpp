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

#include "gtest/gtest.h"
#include "ginv/fixtures.hpp"
#include "ginv/ginv.hpp"
#include "support.hpp"

namespace ginv {
namespace {

using fixtures::fix_a;
using fixtures::fix_b;
using fixtures::fix_c;

const Digraph kPath3(3, {{1, 2}, {2, 3}});

TEST(BMatrixTest, PathDigraph) {
  EXPECT_EQ(b_matrix(kPath3), (ExactMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_TRUE(b_matrix(kPath3).is_unitriangular());
}

TEST(BMatrixTest, FixBFirstRow) {
  const ExactMatrix b = b_matrix(fix_b());
  const int expected[] = {1, 1, 1, 0, 1};
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(b(1, j), expected[j - 1]) << "column " << j;
}

TEST(BMatrixTest, EmptyDigraphIsIdentity) { EXPECT_EQ(b_matrix(Digraph(3)), ExactMatrix::identity(3)); }

TEST(BMatrixTest, MultiplicityIsTheEntry) {
  Digraph d(2);
  d.add_arc(1, 2, 5);
  EXPECT_EQ(b_matrix(d)(1, 2), 5);
}

TEST(InverseBTest, PathDigraph) {
  EXPECT_EQ(inverse_b(b_matrix(kPath3)), (ExactMatrix{{1, -1, 1}, {0, 1, -1}, {0, 0, 1}}));
}

TEST(InverseBTest, FixBEntries) {
  const ExactMatrix inv = inverse_b(b_matrix(fix_b()));
  EXPECT_EQ(inv(1, 3), 0);
  EXPECT_EQ(inv(1, 5), -1);
}

TEST(InverseBTest, FixCEntry) { EXPECT_EQ(inverse_b(b_matrix(fix_c()))(1, 4), -2); }

TEST(InverseBTest, ExactOnBothSides) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactMatrix b = b_matrix(testing::random_digraph(rng, 1 + trial % 12, 0.5, 4));
    const ExactMatrix inv = inverse_b(b);
    EXPECT_EQ(b * inv, ExactMatrix::identity(b.size()));
    EXPECT_EQ(inv * b, ExactMatrix::identity(b.size()));
    EXPECT_TRUE(inv.is_unitriangular());
  }
}

TEST(InverseBTest, NoOverflowOnLongPaths) {
  // Complete digraph on 70 vertices: entry (1,n) of the inverse is
  // sum over subsets of (-1)^length, which is 0 for n > 2; every
  // intermediate power is astronomically large.
  Digraph d(70);
  for (int i = 1; i <= 70; ++i)
    for (int j = i + 1; j <= 70; ++j) d.add_arc(i, j, 3);
  const ExactMatrix b = b_matrix(d);
  EXPECT_EQ(b * inverse_b(b), ExactMatrix::identity(70));
  EXPECT_GT(boost::multiprecision::abs(inverse_b(b)(1, 70)), Integer(1) << 64);
}

TEST(SignedPathCountTest, PaperValues) {
  EXPECT_EQ(signed_path_count(fix_a(), 1, 4), 1);
  EXPECT_EQ(signed_path_count(fix_a(), 1, 6), 0);
}

TEST(SignedPathCountTest, DiagonalAndBelow) {
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(signed_path_count(fix_a(), i, i), 1);
    if (i > 1) { EXPECT_EQ(signed_path_count(fix_a(), i, 1), 0); }
  }
  EXPECT_THROW(signed_path_count(fix_a(), 0, 3), std::out_of_range);
  EXPECT_THROW(signed_path_count(fix_a(), 1, 7), std::out_of_range);
}

TEST(PathStatsTest, PaperValues) {
  const PathStats a = path_stats(fix_a(), 1, 4);
  EXPECT_EQ(a.even_count, 2);
  EXPECT_EQ(a.odd_count, 1);
  EXPECT_EQ(a.max_length, 2);

  const PathStats b = path_stats(fix_b(), 1, 5);
  EXPECT_EQ(b.even_count, 1);
  EXPECT_EQ(b.odd_count, 2);
  EXPECT_EQ(b.max_length, 4);

  const PathStats none = path_stats(fix_a(), 2, 3);
  EXPECT_EQ(none.total(), 0);
  EXPECT_FALSE(none.max_length.has_value());
  EXPECT_THROW(path_stats(fix_a(), 3, 3), PreconditionError);
}

TEST(PairingTest, PaperValues) {
  EXPECT_EQ(pairing(fix_a(), 1, 4), 1);
  EXPECT_EQ(pairing(fix_c(), 1, 4), -1);
  EXPECT_EQ(pairing(fix_a(), 2, 3), 0);
  EXPECT_EQ(pairing(fix_a(), 5, 5), 1);
  EXPECT_THROW(pairing(fix_a(), 4, 1), PreconditionError);
}

TEST(PairingTest, AgreesWithLongestPathTable) {
  testing::for_each_reference_digraph([](const Digraph& d) {
    const LongestPaths longest(d);
    for (int i = 1; i <= d.size(); ++i)
      for (int j = i; j <= d.size(); ++j) ASSERT_EQ(longest.pairing(i, j), pairing(d, i, j));
  });
}

TEST(DeletionEntryTest, PaperValues) {
  EXPECT_EQ(deletion_entry(fix_a(), 4, 1, 6), -1);
  EXPECT_EQ(deletion_entry(fix_b(), 3, 1, 5), -1);
}

TEST(DeletionEntryTest, VertexOffEveryPathChangesNothing) {
  // 2 does not reach 3 in FIX_A, so deleting 3 leaves every 2 ~> 6 path.
  EXPECT_EQ(deletion_entry(fix_a(), 3, 2, 6), signed_path_count(fix_a(), 2, 6));
  EXPECT_THROW(deletion_entry(fix_a(), 1, 1, 6), PreconditionError);
}

// ---------------------------------------------------------------------------
// Properties

void expect_path_identities(const Digraph& d) {
  const int n = d.size();
  const ExactMatrix inv = inverse_b(b_matrix(d));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Integer s = signed_path_count(d, i, j);
      ASSERT_EQ(s, inv(i, j));
      const PathStats stats = path_stats(d, i, j);
      ASSERT_EQ(stats.signed_count(), s);
      ASSERT_EQ(stats.max_length.has_value(), stats.total() != 0);

      Integer even = 0, odd = 0;
      int longest = -1;
      for (const auto& p : oracle::enumerate_paths(d, i, j)) {
        (p.length() % 2 == 0 ? even : odd) += 1;
        longest = std::max(longest, p.length());
      }
      ASSERT_EQ(stats.even_count, even);
      ASSERT_EQ(stats.odd_count, odd);
      ASSERT_EQ(stats.max_length.value_or(-1), longest);

      for (int k = i + 1; k < j; ++k)
        ASSERT_EQ(s, signed_path_count(d, i, k) * signed_path_count(d, k, j) + deletion_entry(d, k, i, j))
            << format_graph(d) << "i=" << i << " k=" << k << " j=" << j;
    }
}

TEST(PathPropertyTest, ExhaustiveSmallDigraphs) {
  testing::for_each_small_digraph([](const Digraph& d) { expect_path_identities(d); });
}

TEST(PathPropertyTest, SampledSixAndSevenVertices) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 600; ++trial)
    expect_path_identities(testing::random_digraph(rng, 6 + trial % 2, 0.2 + 0.1 * (trial % 6), 2));
}

TEST(PathPropertyTest, NeumannSeriesMatches) {
  testing::for_each_reference_digraph([](const Digraph& d) {
    const ExactMatrix b = b_matrix(d);
    ASSERT_EQ(oracle::neumann_inverse(b), inverse_b(b));
  });
}

// When Gamma is bipartite the pairing is multiplicative along paths.
TEST(PathPropertyTest, PairingIsMultiplicativeWhenGammaIsBipartite) {
  int checked = 0;
  testing::for_each_reference_digraph([&](const Digraph& d) {
    if (!is_bipartite(gamma(d))) return;
    const LongestPaths longest(d);
    const int n = d.size();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (longest.reaches(i, j) && longest.reaches(j, k)) {
            ASSERT_EQ(longest.pairing(i, j) * longest.pairing(j, k), longest.pairing(i, k)) << format_graph(d);
            ++checked;
          }
  });
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace ginv
