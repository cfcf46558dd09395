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

#include "faircc/pivot.h"

#include <numeric>
#include <string>

#include "faircc/error.h"
#include "faircc/random.h"

namespace faircc {
namespace {

std::vector<VertexId> ResolveSubset(const SignedCompleteGraph& g,
                                    const PivotRun& run) {
  if (!run.subset) {
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::vector<VertexId>& subset = *run.subset;
  if (subset.empty()) throw InvalidInputError("pivot subset is empty");
  std::vector<bool> seen(g.num_vertices(), false);
  for (VertexId v : subset) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidInputError("pivot subset vertex " + std::to_string(v) +
                              " out of range");
    }
    if (seen[v]) {
      throw InvalidInputError("pivot subset repeats vertex " +
                              std::to_string(v));
    }
    seen[v] = true;
  }
  return subset;
}

Clustering PivotPass(const SignedCompleteGraph& g,
                     std::span<const VertexId> subset, std::uint64_t seed) {
  const int m = static_cast<int>(subset.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<int>(order));

  std::vector<ClusterId> cluster(m, -1);
  ClusterId next = 0;
  for (int pivot : order) {
    if (cluster[pivot] >= 0) continue;
    cluster[pivot] = next;
    for (int j = 0; j < m; ++j) {
      if (cluster[j] < 0 && g.IsPositive(subset[pivot], subset[j])) {
        cluster[j] = next;
      }
    }
    ++next;
  }
  return Clustering(std::move(cluster));
}

}  // namespace

Clustering PivotCluster(const SignedCompleteGraph& g, const PivotRun& run) {
  const std::vector<VertexId> subset = ResolveSubset(g, run);
  return PivotPass(g, subset, run.seed);
}

Clustering BestOfRestarts(const SignedCompleteGraph& g, const PivotRun& run) {
  if (run.restarts < 1) {
    throw InvalidInputError("restarts must be >= 1, got " +
                            std::to_string(run.restarts));
  }
  const std::vector<VertexId> subset = ResolveSubset(g, run);
  Clustering best;
  std::int64_t best_cost = -1;
  for (int r = 0; r < run.restarts; ++r) {
    Clustering c = PivotPass(g, subset, run.seed + static_cast<std::uint64_t>(r));
    const std::int64_t cost = SubsetDisagreements(g, subset, c);
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = std::move(c);
    }
  }
  return best;
}

std::int64_t SubsetDisagreements(const SignedCompleteGraph& g,
                                 std::span<const VertexId> subset,
                                 const Clustering& c) {
  if (static_cast<int>(subset.size()) != c.num_vertices()) {
    throw InvalidInputError("clustering does not match subset size");
  }
  std::int64_t total = 0;
  const int m = static_cast<int>(subset.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool together = c.cluster(i) == c.cluster(j);
      if (together != g.IsPositive(subset[i], subset[j])) ++total;
    }
  }
  return total;
}

}  // namespace faircc
