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

// Randomized pivot correlation clustering (3-approximate in expectation).

#ifndef FAIRCC_PIVOT_H_
#define FAIRCC_PIVOT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "faircc/graph.h"

namespace faircc {

inline constexpr int kDefaultRestarts = 25;

struct PivotRun {
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  // Vertices to cluster; all vertices when unset.
  std::optional<std::vector<VertexId>> subset;
};

// One pivot pass seeded with run.seed (run.restarts is ignored). Position i
// of the result is the i-th vertex of the subset.
//
// The pass visits the subset in a seeded Fisher-Yates order; each vertex not
// yet clustered becomes a pivot and absorbs every unclustered vertex joined
// to it by a positive edge.
Clustering PivotCluster(const SignedCompleteGraph& g, const PivotRun& run);

// Runs PivotCluster with seeds seed, seed+1, ..., seed+restarts-1 and keeps
// the clustering with the fewest disagreements on the induced subgraph. Ties
// go to the earliest seed.
Clustering BestOfRestarts(const SignedCompleteGraph& g, const PivotRun& run);

// Disagreements of a subset-indexed clustering on the induced subgraph.
std::int64_t SubsetDisagreements(const SignedCompleteGraph& g,
                                 std::span<const VertexId> subset,
                                 const Clustering& c);

}  // namespace faircc

#endif  // FAIRCC_PIVOT_H_
