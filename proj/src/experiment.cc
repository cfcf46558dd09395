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
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "faircc/baselines.h"
#include "faircc/error.h"
#include "faircc/faircc.h"
#include "faircc/random.h"

namespace faircc {

std::string_view ToString(Algorithm algo) {
  switch (algo) {
    case Algorithm::kCC:
      return "cc";
    case Algorithm::kWMatch:
      return "wmatch";
    case Algorithm::kUFairCC:
      return "ufaircc";
    case Algorithm::kCCMerge:
      return "ccmerge";
    case Algorithm::kFairCC:
      return "faircc";
  }
  return "?";
}

std::vector<Algorithm> AllAlgorithms() {
  return {Algorithm::kCC, Algorithm::kWMatch, Algorithm::kUFairCC,
          Algorithm::kCCMerge, Algorithm::kFairCC};
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : AllAlgorithms()) {
    if (ToString(a) == name) return a;
  }
  return std::nullopt;
}

bool GuaranteesFairness(Algorithm algo) { return algo != Algorithm::kCC; }

std::uint64_t PivotSeedFor(std::uint64_t run_seed) {
  return MixSeed(run_seed);
}

Clustering RunAlgorithm(Algorithm algo, const SignedCompleteGraph& g,
                        const ColorAssignment& colors, const FairnessSpec& spec,
                        std::uint64_t run_seed, const RunOptions& options) {
  PivotRun pivot;
  pivot.seed = PivotSeedFor(run_seed);
  pivot.restarts = options.restarts;
  switch (algo) {
    case Algorithm::kCC:
      return RunCC(g, pivot);
    case Algorithm::kWMatch:
      return RunWMatch(g, colors, spec);
    case Algorithm::kUFairCC:
      return RunUFairCC(g, colors, spec, pivot);
    case Algorithm::kCCMerge:
      return RunCCMerge(g, colors, spec, pivot);
    case Algorithm::kFairCC: {
      FairCCConfig config;
      config.spec = spec;
      config.pivot = pivot;
      config.try_every_base = options.try_every_base;
      return FairCorrelationClustering(g, colors, config);
    }
  }
  throw InvalidInputError("unknown algorithm");
}

// ---------------------------------------------------------------------------
// Result rows

ResultRow MakeResultRow(std::string dataset, Algorithm algo,
                        std::uint64_t seed, const SignedCompleteGraph& g,
                        const ColorAssignment& colors,
                        const FairnessSpec& spec, const Clustering& c,
                        std::int64_t millis) {
  ResultRow row;
  row.dataset = std::move(dataset);
  row.algo = std::string(ToString(algo));
  row.seed = seed;
  row.n = g.num_vertices();
  row.colors = colors.num_colors();
  row.spec = spec.num_colors() > 0 ? spec.ToString() : "none";
  row.disagreements = Disagreements(g, c);
  row.fair = spec.num_colors() > 0 && CheckFairness(colors, c, spec).pass;
  row.clusters = c.num_clusters();
  row.millis = millis;
  auto hist = ColorDistribution(colors, c);
  if (hist.size() > static_cast<std::size_t>(kTopClusters)) {
    hist.resize(kTopClusters);
  }
  row.top_clusters = std::move(hist);
  return row;
}

std::string ResultRowCsv(const ResultRow& row) {
  return row.dataset + "," + row.algo + "," + std::to_string(row.seed) + "," +
         std::to_string(row.n) + "," + std::to_string(row.colors) + "," +
         row.spec + "," + std::to_string(row.disagreements) + "," +
         (row.fair ? "1" : "0") + "," + std::to_string(row.clusters) + "," +
         std::to_string(row.millis);
}

Json ResultRowToJson(const ResultRow& row) {
  Json j;
  j["dataset"] = row.dataset;
  j["algo"] = row.algo;
  j["seed"] = row.seed;
  j["n"] = row.n;
  j["colors"] = row.colors;
  j["spec"] = row.spec;
  j["disagreements"] = row.disagreements;
  j["fair"] = row.fair;
  j["clusters"] = row.clusters;
  j["millis"] = row.millis;
  Json top = Json::array();
  for (const ClusterHistogram& h : row.top_clusters) {
    Json entry;
    entry["cluster"] = h.cluster;
    entry["size"] = h.size;
    entry["smallest_vertex"] = h.smallest_vertex;
    entry["color_counts"] = h.color_counts;
    top.push_back(std::move(entry));
  }
  j["top_clusters"] = std::move(top);
  return j;
}

ResultRow ResultRowFromJson(const Json& j) {
  try {
    ResultRow row;
    row.dataset = j.at("dataset").get<std::string>();
    row.algo = j.at("algo").get<std::string>();
    row.seed = j.at("seed").get<std::uint64_t>();
    row.n = j.at("n").get<int>();
    row.colors = j.at("colors").get<int>();
    row.spec = j.at("spec").get<std::string>();
    row.disagreements = j.at("disagreements").get<std::int64_t>();
    row.fair = j.at("fair").get<bool>();
    row.clusters = j.at("clusters").get<int>();
    row.millis = j.at("millis").get<std::int64_t>();
    for (const Json& entry : j.at("top_clusters")) {
      ClusterHistogram h;
      h.cluster = entry.at("cluster").get<int>();
      h.size = entry.at("size").get<int>();
      h.smallest_vertex = entry.at("smallest_vertex").get<int>();
      h.color_counts = entry.at("color_counts").get<std::vector<int>>();
      row.top_clusters.push_back(std::move(h));
    }
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result row: ") + e.what());
  }
}

bool FairFlagConsistent(const ResultRow& row, const Clustering& c,
                        const ColorAssignment& colors,
                        const FairnessSpec& spec) {
  const bool fresh =
      spec.num_colors() > 0 && CheckFairness(colors, c, spec).pass;
  return fresh == row.fair;
}

// ---------------------------------------------------------------------------
// Experiment matrix

void ExperimentPlan::Validate() const {
  if (algorithms.empty()) {
    throw InvalidInputError("experiment needs at least one algorithm");
  }
  if (runs < 1) throw InvalidInputError("experiment needs at least one seed");
  if (jobs < 1) throw InvalidInputError("--jobs must be >= 1");
  if (colors.num_vertices() != graph.num_vertices()) {
    throw InvalidInputError("colors do not match the graph size");
  }
}

ExperimentResult RunExperiment(const ExperimentPlan& plan) {
  plan.Validate();
  bool needs_spec = false;
  for (Algorithm a : plan.algorithms) needs_spec |= GuaranteesFairness(a);
  if (needs_spec) plan.spec.CheckFeasible(plan.colors);

  const std::size_t cells = plan.algorithms.size() * plan.runs;
  ExperimentResult result;
  result.rows.resize(cells);
  result.clusterings.resize(cells);
  std::vector<std::exception_ptr> errors(cells);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const Algorithm algo = plan.algorithms[cell / plan.runs];
      const std::uint64_t seed = plan.seed + cell % plan.runs;
      try {
        const auto start = std::chrono::steady_clock::now();
        Clustering c = RunAlgorithm(algo, plan.graph, plan.colors, plan.spec,
                                    seed, plan.options);
        const auto stop = std::chrono::steady_clock::now();
        const std::int64_t millis =
            plan.record_time
                ? std::chrono::duration_cast<std::chrono::milliseconds>(
                      stop - start)
                      .count()
                : 0;
        result.rows[cell] = MakeResultRow(plan.dataset, algo, seed, plan.graph,
                                          plan.colors, plan.spec, c, millis);
        result.clusterings[cell] = std::move(c);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
    }
  };
  const int threads =
      static_cast<int>(std::min<std::size_t>(plan.jobs, cells));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t a = 0; a < plan.algorithms.size(); ++a) {
    AlgorithmSummary s;
    s.algo = std::string(ToString(plan.algorithms[a]));
    for (int r = 0; r < plan.runs; ++r) {
      const ResultRow& row = result.rows[a * plan.runs + r];
      s.mean_disagreements += static_cast<double>(row.disagreements);
      s.mean_clusters += row.clusters;
      s.mean_millis += static_cast<double>(row.millis);
      s.all_fair = s.all_fair && row.fair;
      if (GuaranteesFairness(plan.algorithms[a]) && !row.fair) {
        result.failures.push_back(s.algo + " seed " + std::to_string(row.seed) +
                                  " violated fairness");
      }
    }
    s.mean_disagreements /= plan.runs;
    s.mean_clusters /= plan.runs;
    s.mean_millis /= plan.runs;
    result.summaries.push_back(std::move(s));
  }
  return result;
}

namespace {

std::string FormatMean(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

}  // namespace

std::string ExperimentCsv(const ExperimentResult& result,
                          const ExperimentPlan& plan) {
  std::string out(kResultCsvHeader);
  out += '\n';
  for (const ResultRow& row : result.rows) out += ResultRowCsv(row) + "\n";
  const std::string spec =
      plan.spec.num_colors() > 0 ? plan.spec.ToString() : "none";
  for (const AlgorithmSummary& s : result.summaries) {
    out += plan.dataset + "," + s.algo + ",mean," +
           std::to_string(plan.graph.num_vertices()) + "," +
           std::to_string(plan.colors.num_colors()) + "," + spec + "," +
           FormatMean(s.mean_disagreements) + "," + (s.all_fair ? "1" : "0") +
           "," + FormatMean(s.mean_clusters) + "," + FormatMean(s.mean_millis) +
           "\n";
  }
  return out;
}

}  // namespace faircc
