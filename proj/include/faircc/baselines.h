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

// Comparison algorithms for the fair pipeline.

#ifndef FAIRCC_BASELINES_H_
#define FAIRCC_BASELINES_H_

#include <optional>
#include <string_view>

#include "faircc/graph.h"
#include "faircc/pivot.h"

namespace faircc {

enum class BaselineKind { kCC, kWMatch, kUFairCC, kCCMerge };

std::string_view ToString(BaselineKind kind);
std::optional<BaselineKind> ParseBaselineKind(std::string_view name);

// Unconstrained best-of-restarts pivot over every vertex.
Clustering RunCC(const SignedCompleteGraph& g, const PivotRun& pivot);

// Each hyper-node of the pair-cost matching is its own cluster.
Clustering RunWMatch(const SignedCompleteGraph& g,
                     const ColorAssignment& colors, const FairnessSpec& spec);

// The fair pipeline with every matching cost set to 1.
Clustering RunUFairCC(const SignedCompleteGraph& g,
                      const ColorAssignment& colors, const FairnessSpec& spec,
                      const PivotRun& pivot);

// Unconstrained clustering followed by a greedy fairness repair.
//
//  1. Clusters are visited largest first (ties: smallest vertex id). Each
//     keeps k base vertices, k = min(#base, min_i floor(n_i / lo_i)), and
//     min(n_i, k * hi_i) vertices of every other color i, preferring members
//     with more positive edges inside the cluster (ties: smaller id). The
//     rest goes to a donor pool.
//  2. Kept clusters, largest first, each absorb one group of one base vertex
//     plus lo_i vertices of each color i from the pool, while the pool can
//     still form a group. Each group member is the pool vertex with most
//     positive edges into the cluster (ties: smaller id).
//  3. Each remaining pool base vertex (increasing id) founds a new cluster
//     with lo_i partners of every color i, those with most positive edges to
//     it. If the pool runs short of color i, the color-i vertex with the
//     lowest (positive - negative) balance inside a cluster holding more than
//     base * lo_i of that color is reclaimed first.
//  4. Leftover non-base vertices (only possible when lo_i < hi_i) join the
//     cluster with spare capacity and the best (positive - negative) balance.
Clustering RunCCMerge(const SignedCompleteGraph& g,
                      const ColorAssignment& colors, const FairnessSpec& spec,
                      const PivotRun& pivot);

// Greedy repair of an arbitrary starting clustering (steps 1-4 above).
Clustering RepairFairness(const SignedCompleteGraph& g,
                          const ColorAssignment& colors,
                          const FairnessSpec& spec, const Clustering& start);

}  // namespace faircc

#endif  // FAIRCC_BASELINES_H_
