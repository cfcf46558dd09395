// Copyright 2026 The FairCC Authors.
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

#include "faircc/oracle.h"

#include <cstdlib>

#include <gtest/gtest.h>

#include "faircc/error.h"
#include "test_util.h"

namespace faircc {
namespace {

using testing::Graph;

TEST(ForEachPartitionTest, BellNumbers) {
  const std::int64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(ForEachPartition(n, [](auto) {}), bell[n]) << "n = " << n;
  }
}

TEST(ForEachPartitionTest, GrowthStringsAreValid) {
  ForEachPartition(5, [](std::span<const int> rgs) {
    int max_seen = -1;
    for (int b : rgs) {
      EXPECT_LE(b, max_seen + 1);
      max_seen = std::max(max_seen, b);
    }
  });
}

TEST(OptimalClusteringTest, Examples) {
  EXPECT_EQ(OptimalClustering(SignedCompleteGraph(5)).value, 0);
  EXPECT_EQ(OptimalClustering(SignedCompleteGraph(5)).clustering.num_clusters(),
            1);
  const OracleResult neg = OptimalClustering(testing::AllNegative(5));
  EXPECT_EQ(neg.value, 0);
  EXPECT_EQ(neg.clustering.num_clusters(), 5);
  EXPECT_EQ(OptimalClustering(Graph(3, {{0, 2}})).value, 1);
}

TEST(OptimalClusteringTest, MatchesPlainEnumeration) {
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.Uniform(7));
    const SignedCompleteGraph g = RandomSignedGraph(n, rng.UniformReal(), rng);
    std::int64_t best = -1;
    std::vector<int> best_rgs;
    ForEachPartition(n, [&](std::span<const int> rgs) {
      std::vector<int> labels(rgs.begin(), rgs.end());
      const std::int64_t cost = testing::CountDisagreements(g, labels);
      if (best < 0 || cost < best) {
        best = cost;
        best_rgs = labels;
      }
    });
    const OracleResult r = OptimalClustering(g);
    EXPECT_EQ(r.value, best);
    // The first optimum in lexicographic order.
    EXPECT_EQ(testing::Labels(r.clustering), best_rgs);
  }
}

TEST(OptimalFairClusteringTest, Examples) {
  const OracleResult forced = OptimalFairClustering(
      Graph(2, {{0, 1}}), ColorAssignment({0, 1}), FairnessSpec::TwoColor(1));
  EXPECT_EQ(forced.value, 1);
  EXPECT_EQ(OptimalFairClustering(SignedCompleteGraph(4),
                                  ColorAssignment({0, 1, 0, 1}),
                                  FairnessSpec::TwoColor(1))
                .value,
            0);
  EXPECT_THROW(OptimalFairClustering(SignedCompleteGraph(3),
                                     ColorAssignment({0, 1, 1}),
                                     FairnessSpec::TwoColor(1)),
               InfeasibleError);
}

TEST(OptimalFairClusteringTest, DominatesUnconstrainedAndMatchesFilter) {
  Rng rng(19);
  const FairnessSpec spec = FairnessSpec::TwoColorBounded(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const ColorAssignment colors = RandomColoring({3, 4}, rng);
    const SignedCompleteGraph g = RandomSignedGraph(7, rng.UniformReal(), rng);
    std::int64_t best = -1;
    ForEachPartition(7, [&](std::span<const int> rgs) {
      const Clustering c(std::vector<int>(rgs.begin(), rgs.end()));
      if (!CheckFairness(colors, c, spec).pass) return;
      const std::int64_t cost = Disagreements(g, c);
      if (best < 0 || cost < best) best = cost;
    });
    const OracleResult fair = OptimalFairClustering(g, colors, spec);
    EXPECT_EQ(fair.value, best);
    EXPECT_TRUE(CheckFairness(colors, fair.clustering, spec).pass);
    EXPECT_GE(fair.value, OptimalClustering(g).value);
  }
}

TEST(OracleLimitTest, SizeErrors) {
  OracleLimit limit;
  limit.max_n = 3;
  EXPECT_THROW(OptimalClustering(SignedCompleteGraph(4), limit), SizeError);
  limit.max_r = 2;
  BMatchingInstance inst{CostMatrix::Zero(1, 3), {3}, {3}};
  EXPECT_THROW(OptimalBMatching(inst, limit), SizeError);
}

TEST(OracleLimitTest, Environment) {
  ::setenv("FAIRCC_ORACLE_MAX_N", "6", 1);
  EXPECT_EQ(OracleLimit::FromEnvironment().max_n, 6);
  ::setenv("FAIRCC_ORACLE_MAX_N", "six", 1);
  EXPECT_THROW(OracleLimit::FromEnvironment(), ParseError);
  ::unsetenv("FAIRCC_ORACLE_MAX_N");
  EXPECT_EQ(OracleLimit::FromEnvironment().max_n, 10);
}

TEST(OptimalBMatchingTest, Examples) {
  CostMatrix cost(2, 2);
  cost << 0, 5, 5, 0;
  EXPECT_EQ(OptimalBMatching({cost, {1, 1}, {1, 1}}).weight, 0);
  CostMatrix row(1, 3);
  row << 2, 3, 4;
  EXPECT_EQ(OptimalBMatching({row, {3}, {3}}).weight, 9);
}

TEST(MirrorGraphTest, Structure) {
  const SignedCompleteGraph g = Graph(3, {{0, 2}});
  const MirrorInstance m = MirrorGraph(g);
  ASSERT_EQ(m.graph.num_vertices(), 6);
  for (int u = 0; u < 3; ++u) {
    EXPECT_EQ(m.colors.color(u), 1);
    EXPECT_EQ(m.colors.color(3 + u), 0);
    EXPECT_TRUE(m.graph.IsPositive(u, 3 + u));
    for (int v = 0; v < 3; ++v) {
      if (u == v) continue;
      EXPECT_EQ(m.graph.sign(u, v), g.sign(u, v));
      EXPECT_EQ(m.graph.sign(3 + u, 3 + v), g.sign(u, v));
      EXPECT_EQ(m.graph.sign(u, 3 + v), g.sign(u, v));
    }
  }
}

TEST(MirrorGraphTest, Examples) {
  const FairnessSpec spec = FairnessSpec::TwoColor(1);
  const MirrorInstance positive = MirrorGraph(SignedCompleteGraph(2));
  EXPECT_EQ(positive.graph, SignedCompleteGraph(4));
  EXPECT_EQ(OptimalFairClustering(positive.graph, positive.colors, spec).value,
            0);

  const SignedCompleteGraph negative_edge = Graph(2, {{0, 1}});
  EXPECT_EQ(OptimalClustering(negative_edge).value, 0);
  const MirrorInstance neg = MirrorGraph(negative_edge);
  EXPECT_EQ(OptimalFairClustering(neg.graph, neg.colors, spec).value, 0);

  const SignedCompleteGraph triangle = Graph(3, {{0, 2}});
  const MirrorInstance tri = MirrorGraph(triangle);
  EXPECT_EQ(OptimalFairClustering(tri.graph, tri.colors, spec).value, 4);
}

TEST(MirrorGraphTest, PairingAchievesFourTimesOptimum) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const SignedCompleteGraph g = RandomSignedGraph(4, 0.5, rng);
    const OracleResult opt = OptimalClustering(g);
    const MirrorInstance m = MirrorGraph(g);
    const Clustering lifted = MirrorPairing(opt.clustering);
    EXPECT_TRUE(
        CheckFairness(m.colors, lifted, FairnessSpec::TwoColor(1)).pass);
    EXPECT_EQ(Disagreements(m.graph, lifted), 4 * opt.value);
  }
}

TEST(RandomInstancesTest, ColoringCounts) {
  Rng rng(1);
  const ColorAssignment colors = RandomColoring({2, 5, 1}, rng);
  EXPECT_EQ(colors.count(0), 2);
  EXPECT_EQ(colors.count(1), 5);
  EXPECT_EQ(colors.count(2), 1);
  Rng a(3);
  Rng b(3);
  EXPECT_EQ(RandomSignedGraph(9, 0.3, a), RandomSignedGraph(9, 0.3, b));
}

}  // namespace
}  // namespace faircc
