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

// Fair correlation clustering through fairlets.
//
// For every non-base color i, the color-i vertices are assigned to base-color
// vertices by a min-cost b-matching in which each base vertex takes between
// lo_i and hi_i of them. A base vertex together with everything matched to it
// forms a hyper-node. The base-color subgraph is then clustered by the pivot
// algorithm and every hyper-node follows its base vertex, so each output
// cluster is a union of hyper-nodes and inherits their color ratios.
//
// The matching cost of pairing non-base u with base v is the number of
// disagreements that pairing can force: 1 if {u,v} is negative, plus one for
// every third vertex w on which u and v disagree.

#ifndef FAIRCC_FAIRCC_H_
#define FAIRCC_FAIRCC_H_

#include <cstdint>
#include <vector>

#include "faircc/bmatching.h"
#include "faircc/graph.h"
#include "faircc/oracle.h"
#include "faircc/pivot.h"

namespace faircc {

enum class MatchingCost {
  kPairCost,  // disagreement-aware costs (the fair algorithm and wMatch)
  kUnit,      // every pair costs 1 (uFairCC)
};

// Cost of putting non-base vertex u in the same hyper-node as base vertex v.
std::int64_t PairCost(const SignedCompleteGraph& g, VertexId u, VertexId v);

// rows: base vertices, columns: vertices of the matched color.
CostMatrix PairCostTable(const SignedCompleteGraph& g,
                         std::span<const VertexId> base_vertices,
                         std::span<const VertexId> color_vertices,
                         MatchingCost kind = MatchingCost::kPairCost);

// One solved matching per non-base color.
struct ColorMatching {
  ColorId color = 0;
  std::vector<VertexId> vertices;  // right side, increasing id
  CostMatrix cost;
  BMatching matching;
};

struct FairMatchings {
  ColorId base_color = 0;
  std::vector<VertexId> base_vertices;  // left side, increasing id
  std::vector<ColorMatching> per_color;
};

struct HyperNode {
  VertexId representative = 0;
  // attached[c]: vertices of color c matched to the representative; empty
  // for the base color.
  std::vector<std::vector<VertexId>> attached;

  int size() const;
};

// Builds the cost tables and solves one b-matching per non-base color with
// degree interval [lo_i, hi_i] on the base side. Throws InfeasibleError
// naming the color when the global counts do not admit the spec.
FairMatchings ComputeFairMatchings(const SignedCompleteGraph& g,
                                   const ColorAssignment& colors,
                                   const FairnessSpec& spec,
                                   MatchingCost kind = MatchingCost::kPairCost);

std::vector<HyperNode> BuildHyperNodes(const FairMatchings& matchings,
                                       int num_colors);

// Expands a clustering of the base vertices (indexed like
// matchings.base_vertices) to every vertex: matched vertices join their
// representative's cluster.
Clustering AttachMatchedVertices(int num_vertices,
                                 const FairMatchings& matchings,
                                 const Clustering& base_clustering);

struct FairCCConfig {
  FairnessSpec spec;
  PivotRun pivot;
  MatchingCost cost = MatchingCost::kPairCost;
  // With every bound exactly 1:1, rerun the pipeline with each color as the
  // base and keep the cheapest result (configured base tried first).
  bool try_every_base = false;
};

// Full pipeline for any feasible spec. The pivot subset is always the base
// color; config.pivot.subset is ignored. The output is checked against the
// spec before returning.
Clustering FairCorrelationClustering(const SignedCompleteGraph& g,
                                     const ColorAssignment& colors,
                                     const FairCCConfig& config);

// Two colors, base color `base`, exact ratio 1:p.
Clustering FairCCTwoColors(const SignedCompleteGraph& g,
                           const ColorAssignment& colors, int p,
                           const PivotRun& pivot, ColorId base = 0);

// Any number of colors with exact ratios.
Clustering FairCCMulti(const SignedCompleteGraph& g,
                       const ColorAssignment& colors, const FairnessSpec& spec,
                       const PivotRun& pivot, bool try_every_base = false);

// Interval ratios 1:lo_i..1:hi_i.
Clustering FairCCBounded(const SignedCompleteGraph& g,
                         const ColorAssignment& colors,
                         const FairnessSpec& spec, const PivotRun& pivot);

// Approximation factor guaranteed for the pipeline with an alpha-approximate
// base clustering:
//   two colors:  (q^2 + 2q) * alpha + 4 q^2          (q = hi of the other color)
//   k >= 3:      (((k-1) q_max)^2 + 2 q_max) * alpha
//                  + sum_i 2 q_i (k+1) q_max
// For exact specs q = p.
double ApproximationFactor(const FairnessSpec& spec, double alpha = 3.0);

struct MatchingBoundCheck {
  std::vector<ColorId> colors;          // non-base colors, increasing
  std::vector<std::int64_t> weights;    // w(M_i)
  std::vector<std::int64_t> factors;    // 2 * hi_i
  std::vector<bool> pass;               // w(M_i) <= 2 hi_i * OPT_fair
  std::int64_t opt_fair = 0;
  bool all_pass = true;
};

// Solves every per-color matching and compares its weight with the
// brute-force fair optimum. Throws SizeError beyond the oracle limit.
MatchingBoundCheck CheckMatchingWeightBounds(const SignedCompleteGraph& g,
                                             const ColorAssignment& colors,
                                             const FairnessSpec& spec,
                                             const OracleLimit& limit = {});

}  // namespace faircc

#endif  // FAIRCC_FAIRCC_H_
