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

#include "faircc/experiment.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "faircc/error.h"
#include "faircc/oracle.h"
#include "faircc/random.h"

namespace faircc {
namespace {

ExperimentPlan RandomPlan(std::uint64_t seed) {
  Rng rng(seed);
  ExperimentPlan plan;
  plan.dataset = "rand";
  plan.colors = RandomColoring({4, 6}, rng);
  plan.graph = RandomSignedGraph(10, 0.5, rng);
  plan.spec = FairnessSpec::TwoColorBounded(1, 2);
  plan.algorithms = AllAlgorithms();
  return plan;
}

TEST(AlgorithmTest, NamesRoundTrip) {
  for (Algorithm a : AllAlgorithms()) EXPECT_EQ(ParseAlgorithm(ToString(a)), a);
  EXPECT_FALSE(ParseAlgorithm("kmeans").has_value());
  EXPECT_FALSE(GuaranteesFairness(Algorithm::kCC));
  EXPECT_TRUE(GuaranteesFairness(Algorithm::kCCMerge));
}

TEST(ExperimentTest, OneAlgorithmOneSeed) {
  ExperimentPlan plan = RandomPlan(1);
  plan.algorithms = {Algorithm::kFairCC};
  plan.runs = 1;
  const ExperimentResult r = RunExperiment(plan);
  ASSERT_EQ(r.rows.size(), 1u);
  const std::string csv = ExperimentCsv(r, plan);
  // Header, one row, one summary row.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kResultCsvHeader);
}

TEST(ExperimentTest, SummaryIsArithmeticMean) {
  ExperimentPlan plan = RandomPlan(2);
  plan.runs = 5;
  const ExperimentResult r = RunExperiment(plan);
  ASSERT_EQ(r.rows.size(), 25u);
  ASSERT_EQ(r.summaries.size(), 5u);
  for (std::size_t a = 0; a < 5; ++a) {
    double sum = 0.0;
    for (int s = 0; s < 5; ++s) {
      const ResultRow& row = r.rows[a * 5 + s];
      EXPECT_EQ(row.algo, r.summaries[a].algo);
      EXPECT_EQ(row.seed, static_cast<std::uint64_t>(s));
      sum += static_cast<double>(row.disagreements);
    }
    EXPECT_DOUBLE_EQ(r.summaries[a].mean_disagreements, sum / 5.0);
  }
  EXPECT_TRUE(r.failures.empty());
}

TEST(ExperimentTest, ParallelMatchesSerial) {
  ExperimentPlan plan = RandomPlan(3);
  plan.runs = 4;
  const std::string serial = ExperimentCsv(RunExperiment(plan), plan);
  plan.jobs = 4;
  EXPECT_EQ(ExperimentCsv(RunExperiment(plan), plan), serial);
}

TEST(ExperimentTest, InvalidPlans) {
  ExperimentPlan plan = RandomPlan(4);
  plan.algorithms.clear();
  EXPECT_THROW(RunExperiment(plan), InvalidInputError);
  plan = RandomPlan(4);
  plan.runs = 0;
  EXPECT_THROW(RunExperiment(plan), InvalidInputError);
  plan = RandomPlan(4);
  plan.spec = FairnessSpec::TwoColor(1);
  EXPECT_THROW(RunExperiment(plan), InfeasibleError);
}

TEST(ResultRowTest, JsonRoundTripAndFairFlag) {
  ExperimentPlan plan = RandomPlan(5);
  plan.runs = 2;
  const ExperimentResult r = RunExperiment(plan);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ResultRow back = ResultRowFromJson(
        ParseJson(DumpJson(ResultRowToJson(r.rows[i])), "row"));
    EXPECT_EQ(back.disagreements, r.rows[i].disagreements);
    EXPECT_EQ(back.top_clusters, r.rows[i].top_clusters);
    EXPECT_LE(back.top_clusters.size(), static_cast<std::size_t>(kTopClusters));
    EXPECT_TRUE(FairFlagConsistent(back, r.clusterings[i], plan.colors,
                                   plan.spec));
    EXPECT_EQ(back.millis, 0);
  }
}

}  // namespace
}  // namespace faircc
