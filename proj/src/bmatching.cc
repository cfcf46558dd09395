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

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "faircc/error.h"

namespace faircc {
namespace {

using Cost = std::int64_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Residual network for successive-shortest-path min-cost flow. Arc i and
// arc i^1 are a forward/reverse pair.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : out_(num_nodes) {}

  int AddArc(int from, int to, int capacity, Cost cost) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(to);
    residual_.push_back(capacity);
    cost_.push_back(cost);
    out_[from].push_back(id);
    head_.push_back(from);
    residual_.push_back(0);
    cost_.push_back(-cost);
    out_[to].push_back(id + 1);
    return id;
  }

  int flow(int arc) const { return residual_[arc ^ 1]; }

  // Pushes up to `demand` units from s to t along shortest paths. Returns the
  // amount routed; `total_cost` accumulates its cost.
  int Route(int s, int t, int demand, Cost& total_cost) {
    const int n = static_cast<int>(out_.size());
    std::vector<Cost> potential(n, 0);
    std::vector<Cost> dist(n);
    std::vector<int> parent_arc(n);
    int routed = 0;
    using Entry = std::pair<Cost, int>;
    while (routed < demand) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
      dist[s] = 0;
      heap.emplace(0, s);
      while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;
        for (int arc : out_[u]) {
          if (residual_[arc] <= 0) continue;
          const int v = head_[arc];
          const Cost reduced = cost_[arc] + potential[u] - potential[v];
          if (d + reduced < dist[v]) {
            dist[v] = d + reduced;
            parent_arc[v] = arc;
            heap.emplace(dist[v], v);
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      int push = demand - routed;
      for (int v = t; v != s; v = head_[parent_arc[v] ^ 1]) {
        push = std::min(push, residual_[parent_arc[v]]);
      }
      for (int v = t; v != s; v = head_[parent_arc[v] ^ 1]) {
        residual_[parent_arc[v]] -= push;
        residual_[parent_arc[v] ^ 1] += push;
        total_cost += push * cost_[parent_arc[v]];
      }
      routed += push;
    }
    return routed;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> head_;
  std::vector<int> residual_;
  std::vector<Cost> cost_;
};

}  // namespace

void BMatchingInstance::Validate() const {
  const int left = left_size();
  const int right = right_size();
  if (static_cast<int>(degree_lo.size()) != left ||
      static_cast<int>(degree_hi.size()) != left) {
    throw InvalidInputError("degree bounds must have one entry per left node");
  }
  if ((cost.array() < 0).any()) {
    throw InvalidInputError("b-matching costs must be non-negative");
  }
  std::int64_t sum_lo = 0;
  std::int64_t sum_hi = 0;
  for (int l = 0; l < left; ++l) {
    if (degree_lo[l] < 0 || degree_lo[l] > degree_hi[l]) {
      throw InvalidInputError("left node " + std::to_string(l) +
                              " has degree interval [" +
                              std::to_string(degree_lo[l]) + "," +
                              std::to_string(degree_hi[l]) + "]");
    }
    sum_lo += degree_lo[l];
    sum_hi += degree_hi[l];
  }
  if (sum_lo > right || right > sum_hi) {
    throw InfeasibleError("b-matching infeasible: need sum(lo)=" +
                          std::to_string(sum_lo) + " <= R=" +
                          std::to_string(right) + " <= sum(hi)=" +
                          std::to_string(sum_hi));
  }
}

std::vector<int> BMatching::LeftDegrees(int left_size) const {
  std::vector<int> degree(left_size, 0);
  for (int l : assign) ++degree[l];
  return degree;
}

BMatching SolveBMatching(const BMatchingInstance& instance) {
  instance.Validate();
  const int left = instance.left_size();
  const int right = instance.right_size();
  int sum_lo = 0;
  for (int lo : instance.degree_lo) sum_lo += lo;

  const int super_source = 0;
  const int source = 1;
  const int left0 = 2;
  const int right0 = left0 + left;
  const int sink = right0 + right;
  FlowNetwork net(sink + 1);

  net.AddArc(super_source, source, right - sum_lo, 0);
  for (int l = 0; l < left; ++l) {
    if (instance.degree_lo[l] > 0) {
      net.AddArc(super_source, left0 + l, instance.degree_lo[l], 0);
    }
    if (instance.degree_hi[l] > instance.degree_lo[l]) {
      net.AddArc(source, left0 + l,
                 instance.degree_hi[l] - instance.degree_lo[l], 0);
    }
  }
  std::vector<int> pair_arc(static_cast<std::size_t>(left) * right);
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      pair_arc[static_cast<std::size_t>(l) * right + r] =
          net.AddArc(left0 + l, right0 + r, 1, instance.cost(l, r));
    }
  }
  for (int r = 0; r < right; ++r) net.AddArc(right0 + r, sink, 1, 0);

  BMatching result;
  const int routed = net.Route(super_source, sink, right, result.weight);
  if (routed < right) {
    throw InfeasibleError("no assignment meets all degree intervals (" +
                          std::to_string(routed) + " of " +
                          std::to_string(right) + " right nodes placed)");
  }
  result.assign.assign(right, -1);
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      if (net.flow(pair_arc[static_cast<std::size_t>(l) * right + r]) > 0) {
        result.assign[r] = l;
      }
    }
  }
  return result;
}

BMatching SolveExactDegree(const CostMatrix& cost, int p) {
  const std::int64_t left = cost.rows();
  const std::int64_t right = cost.cols();
  if (p < 0 || right != p * left) {
    throw InfeasibleError("exact degree " + std::to_string(p) + " needs R = " +
                          std::to_string(p * left) + ", got R = " +
                          std::to_string(right));
  }
  BMatchingInstance instance;
  instance.cost = cost;
  instance.degree_lo.assign(left, p);
  instance.degree_hi.assign(left, p);
  return SolveBMatching(instance);
}

std::int64_t MatchingWeight(const CostMatrix& cost,
                            const std::vector<int>& assign) {
  if (static_cast<std::int64_t>(assign.size()) != cost.cols()) {
    throw InvalidInputError("assignment must cover every right node");
  }
  std::int64_t weight = 0;
  for (std::size_t r = 0; r < assign.size(); ++r) {
    if (assign[r] < 0 || assign[r] >= cost.rows()) {
      throw InvalidInputError("right node " + std::to_string(r) +
                              " assigned to missing left node");
    }
    weight += cost(assign[r], static_cast<Eigen::Index>(r));
  }
  return weight;
}

}  // namespace faircc
