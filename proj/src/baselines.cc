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

#include "faircc/baselines.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "faircc/error.h"
#include "faircc/faircc.h"

namespace faircc {

std::string_view ToString(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kCC:
      return "cc";
    case BaselineKind::kWMatch:
      return "wmatch";
    case BaselineKind::kUFairCC:
      return "ufaircc";
    case BaselineKind::kCCMerge:
      return "ccmerge";
  }
  return "?";
}

std::optional<BaselineKind> ParseBaselineKind(std::string_view name) {
  for (BaselineKind k : {BaselineKind::kCC, BaselineKind::kWMatch,
                         BaselineKind::kUFairCC, BaselineKind::kCCMerge}) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

Clustering RunCC(const SignedCompleteGraph& g, const PivotRun& pivot) {
  PivotRun run = pivot;
  run.subset.reset();
  return BestOfRestarts(g, run);
}

Clustering RunWMatch(const SignedCompleteGraph& g,
                     const ColorAssignment& colors, const FairnessSpec& spec) {
  const FairMatchings matchings = ComputeFairMatchings(g, colors, spec);
  const Clustering hyper_nodes = Clustering::Singletons(
      static_cast<int>(matchings.base_vertices.size()));
  return AttachMatchedVertices(g.num_vertices(), matchings, hyper_nodes);
}

Clustering RunUFairCC(const SignedCompleteGraph& g,
                      const ColorAssignment& colors, const FairnessSpec& spec,
                      const PivotRun& pivot) {
  FairCCConfig config;
  config.spec = spec;
  config.pivot = pivot;
  config.cost = MatchingCost::kUnit;
  return FairCorrelationClustering(g, colors, config);
}

namespace {

struct WorkCluster {
  std::vector<VertexId> members;
  std::vector<int> counts;  // per color
};

class Repairer {
 public:
  Repairer(const SignedCompleteGraph& g, const ColorAssignment& colors,
           const FairnessSpec& spec)
      : g_(g), colors_(colors), spec_(spec), base_(spec.base_color()) {
    pool_.resize(colors.num_colors());
  }

  Clustering Run(const Clustering& start) {
    KeepFairCores(start);
    AbsorbGroups();
    FoundNewClusters();
    PlaceLeftovers();
    std::vector<ClusterId> ids(g_.num_vertices(), -1);
    for (std::size_t k = 0; k < clusters_.size(); ++k) {
      for (VertexId v : clusters_[k].members) ids[v] = static_cast<int>(k);
    }
    if (std::find(ids.begin(), ids.end(), -1) != ids.end()) {
      throw std::logic_error("fairness repair lost a vertex");
    }
    return Clustering(std::move(ids));
  }

 private:
  // (positive - negative) edges from v into `members`, v itself skipped.
  int Balance(VertexId v, const std::vector<VertexId>& members) const {
    int balance = 0;
    for (VertexId u : members) {
      if (u == v) continue;
      balance += g_.IsPositive(u, v) ? 1 : -1;
    }
    return balance;
  }

  static void SortLargestFirst(std::vector<WorkCluster>& clusters) {
    std::stable_sort(clusters.begin(), clusters.end(),
                     [](const WorkCluster& a, const WorkCluster& b) {
                       if (a.members.size() != b.members.size()) {
                         return a.members.size() > b.members.size();
                       }
                       return a.members.front() < b.members.front();
                     });
  }

  void AddToCluster(WorkCluster& cluster, VertexId v) {
    cluster.members.insert(
        std::lower_bound(cluster.members.begin(), cluster.members.end(), v), v);
    ++cluster.counts[colors_.color(v)];
  }

  void RemoveFromPool(VertexId v) {
    auto& list = pool_[colors_.color(v)];
    list.erase(std::find(list.begin(), list.end(), v));
  }

  void AddToPool(VertexId v) {
    auto& list = pool_[colors_.color(v)];
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  // Pool vertex of color c with the largest score; ties to the smallest id.
  template <typename Score>
  VertexId BestPoolVertex(ColorId c, Score score) const {
    VertexId best = -1;
    int best_score = std::numeric_limits<int>::min();
    for (VertexId v : pool_[c]) {
      const int s = score(v);
      if (s > best_score) {
        best_score = s;
        best = v;
      }
    }
    return best;
  }

  // Step 1.
  void KeepFairCores(const Clustering& start) {
    std::vector<WorkCluster> initial;
    for (auto& members : start.Members()) {
      WorkCluster wc;
      wc.members = std::move(members);
      initial.push_back(std::move(wc));
    }
    SortLargestFirst(initial);
    for (WorkCluster& wc : initial) {
      std::vector<std::vector<VertexId>> by_color(colors_.num_colors());
      std::vector<int> inside(g_.num_vertices(), 0);
      for (VertexId v : wc.members) {
        by_color[colors_.color(v)].push_back(v);
        inside[v] = g_.PositiveDegreeInto(v, wc.members);
      }
      for (auto& list : by_color) {
        std::stable_sort(list.begin(), list.end(),
                         [&](VertexId a, VertexId b) {
                           if (inside[a] != inside[b]) {
                             return inside[a] > inside[b];
                           }
                           return a < b;
                         });
      }
      int k = static_cast<int>(by_color[base_].size());
      for (ColorId c = 0; c < colors_.num_colors(); ++c) {
        if (c == base_) continue;
        k = std::min(k, static_cast<int>(by_color[c].size()) /
                            spec_.bound(c).lo);
      }
      WorkCluster kept;
      kept.counts.assign(colors_.num_colors(), 0);
      for (ColorId c = 0; c < colors_.num_colors(); ++c) {
        const std::size_t keep =
            c == base_ ? static_cast<std::size_t>(k)
                       : std::min(by_color[c].size(),
                                  static_cast<std::size_t>(k) *
                                      spec_.bound(c).hi);
        for (std::size_t i = 0; i < by_color[c].size(); ++i) {
          if (i < keep) {
            AddToCluster(kept, by_color[c][i]);
          } else {
            AddToPool(by_color[c][i]);
          }
        }
      }
      if (k > 0) clusters_.push_back(std::move(kept));
    }
    SortLargestFirst(clusters_);
  }

  bool PoolHasGroup() const {
    if (pool_[base_].empty()) return false;
    for (ColorId c = 0; c < colors_.num_colors(); ++c) {
      if (c == base_) continue;
      if (static_cast<int>(pool_[c].size()) < spec_.bound(c).lo) return false;
    }
    return true;
  }

  // Step 2.
  void AbsorbGroups() {
    for (WorkCluster& target : clusters_) {
      if (!PoolHasGroup()) break;
      for (ColorId c = 0; c < colors_.num_colors(); ++c) {
        const int need = c == base_ ? 1 : spec_.bound(c).lo;
        for (int i = 0; i < need; ++i) {
          const VertexId v = BestPoolVertex(c, [&](VertexId u) {
            return g_.PositiveDegreeInto(u, target.members);
          });
          RemoveFromPool(v);
          AddToCluster(target, v);
        }
      }
    }
  }

  // Moves one surplus color-c vertex from a cluster back to the pool.
  void Reclaim(ColorId c) {
    VertexId best = -1;
    WorkCluster* from = nullptr;
    int best_balance = std::numeric_limits<int>::max();
    for (WorkCluster& wc : clusters_) {
      if (wc.counts[c] <= wc.counts[base_] * spec_.bound(c).lo) continue;
      for (VertexId v : wc.members) {
        if (colors_.color(v) != c) continue;
        const int b = Balance(v, wc.members);
        if (b < best_balance || (b == best_balance && v < best)) {
          best_balance = b;
          best = v;
          from = &wc;
        }
      }
    }
    if (from == nullptr) {
      throw std::logic_error("fairness repair found no surplus to reclaim");
    }
    from->members.erase(
        std::find(from->members.begin(), from->members.end(), best));
    --from->counts[c];
    AddToPool(best);
  }

  // Step 3.
  void FoundNewClusters() {
    while (!pool_[base_].empty()) {
      const VertexId founder = pool_[base_].front();
      for (ColorId c = 0; c < colors_.num_colors(); ++c) {
        if (c == base_) continue;
        while (static_cast<int>(pool_[c].size()) < spec_.bound(c).lo) {
          Reclaim(c);
        }
      }
      WorkCluster wc;
      wc.counts.assign(colors_.num_colors(), 0);
      RemoveFromPool(founder);
      AddToCluster(wc, founder);
      for (ColorId c = 0; c < colors_.num_colors(); ++c) {
        if (c == base_) continue;
        for (int i = 0; i < spec_.bound(c).lo; ++i) {
          const VertexId v = BestPoolVertex(
              c, [&](VertexId u) { return g_.IsPositive(u, founder) ? 1 : 0; });
          RemoveFromPool(v);
          AddToCluster(wc, v);
        }
      }
      clusters_.push_back(std::move(wc));
    }
  }

  // Step 4.
  void PlaceLeftovers() {
    std::vector<VertexId> rest;
    for (const auto& list : pool_) rest.insert(rest.end(), list.begin(), list.end());
    std::sort(rest.begin(), rest.end());
    for (VertexId v : rest) {
      const ColorId c = colors_.color(v);
      WorkCluster* target = nullptr;
      int best_balance = std::numeric_limits<int>::min();
      for (WorkCluster& wc : clusters_) {
        if (wc.counts[c] >= wc.counts[base_] * spec_.bound(c).hi) continue;
        const int b = Balance(v, wc.members);
        if (b > best_balance) {
          best_balance = b;
          target = &wc;
        }
      }
      if (target == nullptr) {
        throw std::logic_error("fairness repair ran out of capacity");
      }
      RemoveFromPool(v);
      AddToCluster(*target, v);
    }
  }

  const SignedCompleteGraph& g_;
  const ColorAssignment& colors_;
  const FairnessSpec& spec_;
  ColorId base_;
  std::vector<WorkCluster> clusters_;
  std::vector<std::vector<VertexId>> pool_;  // per color, sorted
};

}  // namespace

Clustering RepairFairness(const SignedCompleteGraph& g,
                          const ColorAssignment& colors,
                          const FairnessSpec& spec, const Clustering& start) {
  if (colors.num_vertices() != g.num_vertices() ||
      start.num_vertices() != g.num_vertices()) {
    throw InvalidInputError("graph, colors and clustering sizes differ");
  }
  spec.CheckFeasible(colors);
  Clustering out = Repairer(g, colors, spec).Run(start);
  if (!CheckFairness(colors, out, spec).pass) {
    throw std::logic_error("fairness repair produced an unfair clustering");
  }
  return out;
}

Clustering RunCCMerge(const SignedCompleteGraph& g,
                      const ColorAssignment& colors, const FairnessSpec& spec,
                      const PivotRun& pivot) {
  spec.CheckFeasible(colors);
  return RepairFairness(g, colors, spec, RunCC(g, pivot));
}

}  // namespace faircc
