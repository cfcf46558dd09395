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

#include "faircc/bmatching.h"

#include <limits>
#include <optional>

#include <gtest/gtest.h>

#include "faircc/error.h"
#include "faircc/oracle.h"
#include "faircc/random.h"

namespace faircc {
namespace {

CostMatrix Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  CostMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (std::int64_t x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

CostMatrix RandomCosts(int left, int right, int max_cost, Rng& rng) {
  CostMatrix m(left, right);
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) m(i, j) = rng.Uniform(max_cost + 1);
  }
  return m;
}

// Plain nested enumeration of all L^R assignments, kept separate from the
// library oracle.
std::optional<std::int64_t> BruteForce(const BMatchingInstance& inst) {
  const int left = inst.left_size();
  const int right = inst.right_size();
  std::int64_t total = 1;
  for (int r = 0; r < right; ++r) total *= left;
  std::optional<std::int64_t> best;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<int> degree(left, 0);
    std::int64_t weight = 0;
    std::int64_t x = code;
    for (int r = 0; r < right; ++r) {
      const int l = static_cast<int>(x % left);
      x /= left;
      ++degree[l];
      weight += inst.cost(l, r);
    }
    bool ok = true;
    for (int l = 0; l < left; ++l) {
      ok = ok && degree[l] >= inst.degree_lo[l] && degree[l] <= inst.degree_hi[l];
    }
    if (ok && (!best || weight < *best)) best = weight;
  }
  return best;
}

TEST(BMatchingTest, IdentityIsFree) {
  BMatchingInstance inst{Matrix({{0, 9}, {9, 0}}), {1, 1}, {1, 1}};
  const BMatching m = SolveBMatching(inst);
  EXPECT_EQ(m.assign, (std::vector<int>{0, 1}));
  EXPECT_EQ(m.weight, 0);
}

TEST(BMatchingTest, SingleLeftIsForced) {
  BMatchingInstance inst{Matrix({{3, 4}}), {2}, {2}};
  EXPECT_EQ(SolveBMatching(inst).weight, 7);
}

TEST(BMatchingTest, ExactDegreeExamples) {
  EXPECT_EQ(SolveExactDegree(Matrix({{0}}), 1).weight, 0);
  const BMatching m = SolveExactDegree(Matrix({{1, 1, 5, 5}, {5, 5, 1, 1}}), 2);
  EXPECT_EQ(m.weight, 4);
  EXPECT_EQ(m.assign, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(SolveExactDegree(Matrix({{1, 1, 1}}), 2), InfeasibleError);
}

TEST(BMatchingTest, ValidationErrors) {
  EXPECT_THROW(SolveBMatching({Matrix({{1, 1, 1}}), {1}, {2}}), InfeasibleError);
  EXPECT_THROW(SolveBMatching({Matrix({{1}, {1}}), {1, 1}, {1, 1}}),
               InfeasibleError);
  EXPECT_THROW(SolveBMatching({Matrix({{-1}}), {1}, {1}}), InvalidInputError);
  EXPECT_THROW(SolveBMatching({Matrix({{1}}), {2}, {1}}), InvalidInputError);
  EXPECT_THROW(SolveBMatching({Matrix({{1}}), {1, 1}, {1, 1}}),
               InvalidInputError);
}

TEST(BMatchingTest, ThreeBySevenIntervalsMatchEnumeration) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    BMatchingInstance inst{RandomCosts(3, 7, 9, rng), {1, 1, 1}, {3, 3, 3}};
    const BMatching m = SolveBMatching(inst);
    EXPECT_EQ(m.weight, *BruteForce(inst));
    EXPECT_EQ(m.weight, MatchingWeight(inst.cost, m.assign));
    const std::vector<int> deg = m.LeftDegrees(3);
    for (int d : deg) {
      EXPECT_GE(d, 1);
      EXPECT_LE(d, 3);
    }
  }
}

TEST(BMatchingTest, ExactDegreeMatchesEnumeration) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CostMatrix cost = RandomCosts(3, 6, 12, rng);
    BMatchingInstance inst{cost, {2, 2, 2}, {2, 2, 2}};
    EXPECT_EQ(SolveExactDegree(cost, 2).weight, *BruteForce(inst));
  }
}

TEST(BMatchingTest, RandomIntervalsMatchBothOracles) {
  Rng rng(99);
  int checked = 0;
  while (checked < 200) {
    const int left = 1 + static_cast<int>(rng.Uniform(4));
    const int right = 1 + static_cast<int>(rng.Uniform(8));
    BMatchingInstance inst{RandomCosts(left, right, 20, rng), {}, {}};
    for (int l = 0; l < left; ++l) {
      const int lo = static_cast<int>(rng.Uniform(3));
      inst.degree_lo.push_back(lo);
      inst.degree_hi.push_back(lo + static_cast<int>(rng.Uniform(4)));
    }
    const auto expected = BruteForce(inst);
    if (!expected) {
      EXPECT_THROW(SolveBMatching(inst), InfeasibleError);
      continue;
    }
    ++checked;
    EXPECT_EQ(SolveBMatching(inst).weight, *expected);
    EXPECT_EQ(OptimalBMatching(inst).weight, *expected);
  }
}

TEST(BMatchingTest, ConstantShiftAddsDeltaTimesR) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    BMatchingInstance inst{RandomCosts(3, 6, 9, rng), {1, 1, 1}, {3, 3, 3}};
    const std::int64_t delta = 1 + rng.Uniform(10);
    BMatchingInstance shifted = inst;
    shifted.cost.array() += delta;
    const BMatching base = SolveBMatching(inst);
    const BMatching moved = SolveBMatching(shifted);
    EXPECT_EQ(moved.weight, base.weight + delta * 6);
    // The shifted optimum is still optimal for the original costs.
    EXPECT_EQ(MatchingWeight(inst.cost, moved.assign), base.weight);
  }
}

TEST(BMatchingTest, RelaxedIntervalNeverCostsMore) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const CostMatrix cost = RandomCosts(3, 6, 9, rng);
    const BMatching exact = SolveExactDegree(cost, 2);
    const BMatching relaxed = SolveBMatching({cost, {2, 2, 2}, {4, 4, 4}});
    EXPECT_LE(relaxed.weight, exact.weight);
  }
}

TEST(BMatchingTest, DeterministicOutput) {
  Rng rng(1);
  BMatchingInstance inst{RandomCosts(4, 8, 3, rng), {1, 1, 1, 1},
                         {3, 3, 3, 3}};
  EXPECT_EQ(SolveBMatching(inst).assign, SolveBMatching(inst).assign);
}

TEST(MatchingWeightTest, RejectsMalformedAssignment) {
  const CostMatrix cost = Matrix({{1, 2}});
  EXPECT_THROW(MatchingWeight(cost, {0}), InvalidInputError);
  EXPECT_THROW(MatchingWeight(cost, {0, 1}), InvalidInputError);
}

}  // namespace
}  // namespace faircc
