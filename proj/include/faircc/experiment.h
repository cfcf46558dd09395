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

// Algorithm dispatch, result rows, and the algorithm x seed experiment
// matrix.

#ifndef FAIRCC_EXPERIMENT_H_
#define FAIRCC_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faircc/graph.h"
#include "faircc/io.h"
#include "faircc/pivot.h"

namespace faircc {

enum class Algorithm { kCC, kWMatch, kUFairCC, kCCMerge, kFairCC };

std::string_view ToString(Algorithm algo);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::vector<Algorithm> AllAlgorithms();

// Every algorithm except kCC is required to return a fair clustering.
bool GuaranteesFairness(Algorithm algo);

struct RunOptions {
  int restarts = kDefaultRestarts;
  bool try_every_base = false;
};

// Pivot seed used by a run with the given run seed. Restarts within the run
// then use pivot_seed, pivot_seed + 1, ...
std::uint64_t PivotSeedFor(std::uint64_t run_seed);

Clustering RunAlgorithm(Algorithm algo, const SignedCompleteGraph& g,
                        const ColorAssignment& colors, const FairnessSpec& spec,
                        std::uint64_t run_seed, const RunOptions& options = {});

// CSV columns, in order.
inline constexpr std::string_view kResultCsvHeader =
    "dataset,algo,seed,n,colors,spec,disagreements,fair,clusters,millis";

inline constexpr int kTopClusters = 5;

struct ResultRow {
  std::string dataset;
  std::string algo;
  std::uint64_t seed = 0;
  int n = 0;
  int colors = 0;
  std::string spec;
  std::int64_t disagreements = 0;
  bool fair = false;
  int clusters = 0;
  std::int64_t millis = 0;  // 0 unless timing was requested
  std::vector<ClusterHistogram> top_clusters;
};

ResultRow MakeResultRow(std::string dataset, Algorithm algo,
                        std::uint64_t seed, const SignedCompleteGraph& g,
                        const ColorAssignment& colors,
                        const FairnessSpec& spec, const Clustering& c,
                        std::int64_t millis);

std::string ResultRowCsv(const ResultRow& row);
Json ResultRowToJson(const ResultRow& row);
ResultRow ResultRowFromJson(const Json& j);

// True when row.fair matches a fresh fairness check of `c`.
bool FairFlagConsistent(const ResultRow& row, const Clustering& c,
                        const ColorAssignment& colors,
                        const FairnessSpec& spec);

struct ExperimentPlan {
  std::string dataset = "graph";
  SignedCompleteGraph graph{1};
  ColorAssignment colors;
  FairnessSpec spec;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed = 0;  // run r uses seed + r
  int runs = 5;
  RunOptions options;
  int jobs = 1;
  bool record_time = false;

  void Validate() const;
};

struct AlgorithmSummary {
  std::string algo;
  double mean_disagreements = 0.0;
  double mean_clusters = 0.0;
  double mean_millis = 0.0;
  bool all_fair = true;
};

struct ExperimentResult {
  // Algorithm-major, seed-minor order regardless of scheduling.
  std::vector<ResultRow> rows;
  std::vector<Clustering> clusterings;
  std::vector<AlgorithmSummary> summaries;
  // Runs whose algorithm guarantees fairness but whose output failed it.
  std::vector<std::string> failures;
};

// Runs every (algorithm, seed) cell, up to plan.jobs at a time.
ExperimentResult RunExperiment(const ExperimentPlan& plan);

// Per-run rows followed by one summary row per algorithm (seed = "mean").
std::string ExperimentCsv(const ExperimentResult& result,
                          const ExperimentPlan& plan);

}  // namespace faircc

#endif  // FAIRCC_EXPERIMENT_H_
