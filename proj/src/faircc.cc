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

#include "faircc/faircc.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "faircc/error.h"

namespace faircc {

std::int64_t PairCost(const SignedCompleteGraph& g, VertexId u, VertexId v) {
  if (u == v) throw InvalidInputError("pair cost needs two distinct vertices");
  return g.DisagreeingWitnesses(u, v) + (g.IsNegative(u, v) ? 1 : 0);
}

CostMatrix PairCostTable(const SignedCompleteGraph& g,
                         std::span<const VertexId> base_vertices,
                         std::span<const VertexId> color_vertices,
                         MatchingCost kind) {
  CostMatrix cost(base_vertices.size(), color_vertices.size());
  for (Eigen::Index l = 0; l < cost.rows(); ++l) {
    for (Eigen::Index r = 0; r < cost.cols(); ++r) {
      cost(l, r) = kind == MatchingCost::kUnit
                       ? 1
                       : PairCost(g, color_vertices[r], base_vertices[l]);
    }
  }
  return cost;
}

int HyperNode::size() const {
  int total = 1;
  for (const auto& group : attached) total += static_cast<int>(group.size());
  return total;
}

FairMatchings ComputeFairMatchings(const SignedCompleteGraph& g,
                                   const ColorAssignment& colors,
                                   const FairnessSpec& spec,
                                   MatchingCost kind) {
  if (colors.num_vertices() != g.num_vertices()) {
    throw InvalidInputError("colors cover " +
                            std::to_string(colors.num_vertices()) +
                            " vertices, graph has " +
                            std::to_string(g.num_vertices()));
  }
  spec.CheckFeasible(colors);

  FairMatchings out;
  out.base_color = spec.base_color();
  out.base_vertices = colors.VerticesOfColor(spec.base_color());
  const int left = static_cast<int>(out.base_vertices.size());
  for (ColorId c = 0; c < colors.num_colors(); ++c) {
    if (c == spec.base_color()) continue;
    ColorMatching cm;
    cm.color = c;
    cm.vertices = colors.VerticesOfColor(c);
    cm.cost = PairCostTable(g, out.base_vertices, cm.vertices, kind);
    BMatchingInstance instance;
    instance.cost = cm.cost;
    instance.degree_lo.assign(left, spec.bound(c).lo);
    instance.degree_hi.assign(left, spec.bound(c).hi);
    try {
      cm.matching = SolveBMatching(instance);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("color " + std::to_string(c) + ": " + e.what());
    }
    out.per_color.push_back(std::move(cm));
  }
  return out;
}

std::vector<HyperNode> BuildHyperNodes(const FairMatchings& matchings,
                                       int num_colors) {
  std::vector<HyperNode> nodes(matchings.base_vertices.size());
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    nodes[l].representative = matchings.base_vertices[l];
    nodes[l].attached.resize(num_colors);
  }
  for (const ColorMatching& cm : matchings.per_color) {
    for (std::size_t r = 0; r < cm.vertices.size(); ++r) {
      nodes[cm.matching.assign[r]].attached[cm.color].push_back(
          cm.vertices[r]);
    }
  }
  return nodes;
}

Clustering AttachMatchedVertices(int num_vertices,
                                 const FairMatchings& matchings,
                                 const Clustering& base_clustering) {
  if (base_clustering.num_vertices() !=
      static_cast<int>(matchings.base_vertices.size())) {
    throw InvalidInputError("base clustering does not cover the base color");
  }
  std::vector<ClusterId> ids(num_vertices, -1);
  for (std::size_t l = 0; l < matchings.base_vertices.size(); ++l) {
    ids[matchings.base_vertices[l]] =
        base_clustering.cluster(static_cast<VertexId>(l));
  }
  for (const ColorMatching& cm : matchings.per_color) {
    for (std::size_t r = 0; r < cm.vertices.size(); ++r) {
      ids[cm.vertices[r]] = base_clustering.cluster(cm.matching.assign[r]);
    }
  }
  if (std::find(ids.begin(), ids.end(), -1) != ids.end()) {
    throw InvalidInputError("matchings leave a vertex unassigned");
  }
  return Clustering(std::move(ids));
}

namespace {

Clustering RunPipeline(const SignedCompleteGraph& g,
                       const ColorAssignment& colors, const FairnessSpec& spec,
                       const FairCCConfig& config) {
  const FairMatchings matchings =
      ComputeFairMatchings(g, colors, spec, config.cost);
  PivotRun run = config.pivot;
  run.subset = matchings.base_vertices;
  const Clustering base = BestOfRestarts(g, run);
  Clustering out = AttachMatchedVertices(g.num_vertices(), matchings, base);
  if (!CheckFairness(colors, out, spec).pass) {
    throw std::logic_error("fair pipeline produced an unfair clustering");
  }
  return out;
}

bool AllBoundsUnit(const FairnessSpec& spec) {
  for (ColorId c = 0; c < spec.num_colors(); ++c) {
    if (spec.bound(c).lo != 1 || spec.bound(c).hi != 1) return false;
  }
  return true;
}

}  // namespace

Clustering FairCorrelationClustering(const SignedCompleteGraph& g,
                                     const ColorAssignment& colors,
                                     const FairCCConfig& config) {
  Clustering best = RunPipeline(g, colors, config.spec, config);
  if (!config.try_every_base || !AllBoundsUnit(config.spec)) return best;
  std::int64_t best_cost = Disagreements(g, best);
  for (ColorId base = 0; base < config.spec.num_colors(); ++base) {
    if (base == config.spec.base_color()) continue;
    Clustering c = RunPipeline(g, colors, config.spec.WithBase(base), config);
    const std::int64_t cost = Disagreements(g, c);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(c);
    }
  }
  return best;
}

Clustering FairCCTwoColors(const SignedCompleteGraph& g,
                           const ColorAssignment& colors, int p,
                           const PivotRun& pivot, ColorId base) {
  if (colors.num_colors() != 2) {
    throw InvalidInputError("two-color fair clustering needs exactly 2 colors, "
                            "got " + std::to_string(colors.num_colors()));
  }
  if (base != 0 && base != 1) {
    throw InvalidInputError("base color must be 0 or 1");
  }
  std::vector<int> ratios(2, 1);
  ratios[1 - base] = p;
  FairCCConfig config;
  config.spec = FairnessSpec::Exact(base, std::move(ratios));
  config.pivot = pivot;
  return FairCorrelationClustering(g, colors, config);
}

Clustering FairCCMulti(const SignedCompleteGraph& g,
                       const ColorAssignment& colors, const FairnessSpec& spec,
                       const PivotRun& pivot, bool try_every_base) {
  if (!spec.is_exact()) {
    throw InvalidInputError("multi-color fair clustering needs exact ratios");
  }
  FairCCConfig config;
  config.spec = spec;
  config.pivot = pivot;
  config.try_every_base = try_every_base;
  return FairCorrelationClustering(g, colors, config);
}

Clustering FairCCBounded(const SignedCompleteGraph& g,
                         const ColorAssignment& colors,
                         const FairnessSpec& spec, const PivotRun& pivot) {
  FairCCConfig config;
  config.spec = spec;
  config.pivot = pivot;
  return FairCorrelationClustering(g, colors, config);
}

double ApproximationFactor(const FairnessSpec& spec, double alpha) {
  const int k = spec.num_colors();
  const double q_max = spec.max_upper();
  if (k <= 2) {
    return (q_max * q_max + 2 * q_max) * alpha + 4 * q_max * q_max;
  }
  const double spread = (k - 1) * q_max;
  double factor = (spread * spread + 2 * q_max) * alpha;
  for (ColorId c = 0; c < k; ++c) {
    if (c == spec.base_color()) continue;
    factor += 2.0 * spec.bound(c).hi * (k + 1) * q_max;
  }
  return factor;
}

MatchingBoundCheck CheckMatchingWeightBounds(const SignedCompleteGraph& g,
                                             const ColorAssignment& colors,
                                             const FairnessSpec& spec,
                                             const OracleLimit& limit) {
  if (g.num_vertices() > limit.max_n) {
    throw SizeError("bound check limited to n <= " +
                    std::to_string(limit.max_n));
  }
  MatchingBoundCheck check;
  check.opt_fair = OptimalFairClustering(g, colors, spec, limit).value;
  const FairMatchings matchings = ComputeFairMatchings(g, colors, spec);
  for (const ColorMatching& cm : matchings.per_color) {
    const std::int64_t factor = 2 * spec.bound(cm.color).hi;
    const bool ok = cm.matching.weight <= factor * check.opt_fair;
    check.colors.push_back(cm.color);
    check.weights.push_back(cm.matching.weight);
    check.factors.push_back(factor);
    check.pass.push_back(ok);
    check.all_pass = check.all_pass && ok;
  }
  return check;
}

}  // namespace faircc
