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

// Exact min-cost bipartite b-matching. Every right node is matched exactly
// once; left node l receives between degree_lo[l] and degree_hi[l] right
// nodes.

#ifndef FAIRCC_BMATCHING_H_
#define FAIRCC_BMATCHING_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace faircc {

// Dense integer cost table, rows = left nodes, columns = right nodes.
using CostMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct BMatchingInstance {
  CostMatrix cost;
  std::vector<int> degree_lo;
  std::vector<int> degree_hi;

  int left_size() const { return static_cast<int>(cost.rows()); }
  int right_size() const { return static_cast<int>(cost.cols()); }

  // Throws InvalidInputError on malformed fields and InfeasibleError when
  // sum(lo) <= R <= sum(hi) fails.
  void Validate() const;
};

struct BMatching {
  // assign[r]: left node matched to right node r.
  std::vector<int> assign;
  std::int64_t weight = 0;

  // Number of right nodes assigned to each of `left_size` left nodes.
  std::vector<int> LeftDegrees(int left_size) const;
};

// Minimum-cost feasible b-matching, computed as a min-cost flow:
//
//   S* -> source       capacity R - sum(lo)
//   S* -> left l       capacity lo[l]          (lower-bound transfer)
//   source -> left l   capacity hi[l] - lo[l]
//   left l -> right r  capacity 1, cost[l][r]
//   right r -> sink    capacity 1
//
// and R units are routed from S* to the sink by successive shortest paths
// with Johnson potentials. Every unit leaving S* is forced, so a full flow
// exists iff the degree intervals are satisfiable. Costs must be >= 0.
//
// Throws InfeasibleError when no assignment meets the degree intervals.
BMatching SolveBMatching(const BMatchingInstance& instance);

// Every left node takes exactly p right nodes. Requires R == p * L.
BMatching SolveExactDegree(const CostMatrix& cost, int p);

// Sum of cost[assign[r]][r]; throws InvalidInputError on a malformed
// assignment.
std::int64_t MatchingWeight(const CostMatrix& cost,
                            const std::vector<int>& assign);

}  // namespace faircc

#endif  // FAIRCC_BMATCHING_H_
