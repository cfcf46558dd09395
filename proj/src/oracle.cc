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
#include <limits>
#include <string>
#include <vector>

#include "faircc/error.h"

namespace faircc {

OracleLimit OracleLimit::FromEnvironment() {
  OracleLimit limit;
  if (const char* env = std::getenv("FAIRCC_ORACLE_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
      throw ParseError("FAIRCC_ORACLE_MAX_N must be a positive integer, got '" +
                       std::string(env) + "'");
    }
    limit.max_n = static_cast<int>(value);
  }
  return limit;
}

namespace {

void CheckPartitionLimit(int n, const OracleLimit& limit) {
  if (n > limit.max_n) {
    throw SizeError("partition oracle limited to n <= " +
                    std::to_string(limit.max_n) + ", got n = " +
                    std::to_string(n));
  }
}

void Enumerate(int i, int n, int blocks, std::vector<int>& rgs,
               const std::function<void(std::span<const int>)>& visit,
               std::int64_t& count) {
  if (i == n) {
    ++count;
    visit(rgs);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs[i] = b;
    Enumerate(i + 1, n, b == blocks ? blocks + 1 : blocks, rgs, visit, count);
  }
}

// Depth-first search over restricted growth strings. The disagreement count
// over already-placed pairs never decreases as vertices are added, so any
// branch whose partial cost reaches the incumbent is cut. Only strict
// improvements replace the incumbent, which keeps the lexicographically
// first optimum.
class PartitionSearch {
 public:
  PartitionSearch(const SignedCompleteGraph& g, const ColorAssignment* colors,
                  const FairnessSpec* spec)
      : g_(g), colors_(colors), spec_(spec), n_(g.num_vertices()) {
    rgs_.assign(n_, 0);
    if (colors_ != nullptr) {
      num_colors_ = colors_->num_colors();
      block_counts_.assign(n_, std::vector<int>(num_colors_, 0));
      base_remaining_.assign(n_ + 1, 0);
      for (int v = n_ - 1; v >= 0; --v) {
        base_remaining_[v] = base_remaining_[v + 1] +
                             (colors_->color(v) == spec_->base_color() ? 1 : 0);
      }
    }
  }

  bool Run() {
    Search(0, 0, 0);
    return found_;
  }

  std::int64_t best_value() const { return best_; }
  const std::vector<int>& best_rgs() const { return best_rgs_; }

 private:
  void Search(int i, int blocks, std::int64_t partial) {
    if (i == n_) {
      if (colors_ != nullptr && !AllBlocksFair(blocks)) return;
      found_ = true;
      best_ = partial;
      best_rgs_ = rgs_;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      std::int64_t delta = 0;
      for (int j = 0; j < i; ++j) {
        if ((rgs_[j] == b) != g_.IsPositive(i, j)) ++delta;
      }
      if (found_ && partial + delta >= best_) continue;
      rgs_[i] = b;
      if (colors_ != nullptr) {
        ++block_counts_[b][colors_->color(i)];
        if (CanStillBeFair(b, i + 1)) {
          Search(i + 1, b == blocks ? blocks + 1 : blocks, partial + delta);
        }
        --block_counts_[b][colors_->color(i)];
      } else {
        Search(i + 1, b == blocks ? blocks + 1 : blocks, partial + delta);
      }
    }
  }

  // Upper bounds can only be repaired by base vertices still to come.
  bool CanStillBeFair(int block, int next_vertex) const {
    const std::vector<int>& counts = block_counts_[block];
    const std::int64_t base_cap =
        counts[spec_->base_color()] + base_remaining_[next_vertex];
    for (int c = 0; c < num_colors_; ++c) {
      if (c == spec_->base_color()) continue;
      if (counts[c] > base_cap * spec_->bound(c).hi) return false;
    }
    return true;
  }

  bool AllBlocksFair(int blocks) const {
    for (int b = 0; b < blocks; ++b) {
      if (!ClusterIsFair(block_counts_[b], *spec_)) return false;
    }
    return true;
  }

  const SignedCompleteGraph& g_;
  const ColorAssignment* colors_;
  const FairnessSpec* spec_;
  int n_;
  int num_colors_ = 0;
  std::vector<int> rgs_;
  std::vector<std::vector<int>> block_counts_;
  std::vector<int> base_remaining_;
  bool found_ = false;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_rgs_;
};

}  // namespace

std::int64_t ForEachPartition(
    int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw InvalidInputError("partition size must be >= 0");
  std::vector<int> rgs(n, 0);
  std::int64_t count = 0;
  Enumerate(0, n, 0, rgs, visit, count);
  return count;
}

OracleResult OptimalClustering(const SignedCompleteGraph& g,
                               const OracleLimit& limit) {
  CheckPartitionLimit(g.num_vertices(), limit);
  PartitionSearch search(g, nullptr, nullptr);
  search.Run();
  return {Clustering(search.best_rgs()), search.best_value()};
}

OracleResult OptimalFairClustering(const SignedCompleteGraph& g,
                                   const ColorAssignment& colors,
                                   const FairnessSpec& spec,
                                   const OracleLimit& limit) {
  CheckPartitionLimit(g.num_vertices(), limit);
  if (colors.num_vertices() != g.num_vertices()) {
    throw InvalidInputError("colors do not match the graph size");
  }
  spec.CheckFeasible(colors);
  PartitionSearch search(g, &colors, &spec);
  if (!search.Run()) {
    throw InfeasibleError("no partition satisfies the fairness spec " +
                          spec.ToString());
  }
  return {Clustering(search.best_rgs()), search.best_value()};
}

BMatching OptimalBMatching(const BMatchingInstance& instance,
                           const OracleLimit& limit) {
  const int left = instance.left_size();
  const int right = instance.right_size();
  if (right > limit.max_r) {
    throw SizeError("matching oracle limited to R <= " +
                    std::to_string(limit.max_r) + ", got R = " +
                    std::to_string(right));
  }
  instance.Validate();
  if (left == 0) return {};

  std::vector<int> assign(right, 0);
  std::vector<int> degree(left, 0);
  degree[0] = right;
  BMatching best;
  bool found = false;
  while (true) {
    bool feasible = true;
    for (int l = 0; l < left && feasible; ++l) {
      feasible = degree[l] >= instance.degree_lo[l] &&
                 degree[l] <= instance.degree_hi[l];
    }
    if (feasible) {
      const std::int64_t weight = MatchingWeight(instance.cost, assign);
      if (!found || weight < best.weight) {
        found = true;
        best.assign = assign;
        best.weight = weight;
      }
    }
    // Odometer step, last right node fastest.
    int r = right - 1;
    while (r >= 0 && assign[r] == left - 1) {
      --degree[assign[r]];
      assign[r] = 0;
      ++degree[0];
      --r;
    }
    if (r < 0) break;
    --degree[assign[r]];
    ++assign[r];
    ++degree[assign[r]];
  }
  if (!found) {
    throw InfeasibleError("no assignment meets all degree intervals");
  }
  return best;
}

MirrorInstance MirrorGraph(const SignedCompleteGraph& g) {
  const int n = g.num_vertices();
  SignedCompleteGraph h(2 * n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      const Sign s = g.sign(u, v);
      if (u < v) {
        h.SetSign(u, v, s);
        h.SetSign(n + u, n + v, s);
      }
      h.SetSign(u, n + v, s);
    }
  }
  std::vector<ColorId> color_of(2 * n, 0);
  for (VertexId u = 0; u < n; ++u) color_of[u] = 1;
  return {std::move(h), ColorAssignment(std::move(color_of))};
}

Clustering MirrorPairing(const Clustering& c) {
  const int n = c.num_vertices();
  std::vector<ClusterId> ids(2 * n);
  for (VertexId u = 0; u < n; ++u) {
    ids[u] = c.cluster(u);
    ids[n + u] = c.cluster(u);
  }
  return Clustering(std::move(ids));
}

SignedCompleteGraph RandomSignedGraph(int n, double negative_probability,
                                      Rng& rng) {
  SignedCompleteGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(negative_probability)) g.SetSign(u, v, Sign::kNegative);
    }
  }
  return g;
}

ColorAssignment RandomColoring(const std::vector<int>& counts, Rng& rng) {
  std::vector<ColorId> color_of;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    color_of.insert(color_of.end(), counts[c], static_cast<ColorId>(c));
  }
  rng.Shuffle(std::span<ColorId>(color_of));
  return ColorAssignment(std::move(color_of));
}

}  // namespace faircc
