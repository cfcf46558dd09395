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

// Domain model shared by every algorithm: signed complete graphs, vertex
// colors, fairness constraints, clusterings, and the objective / fairness
// evaluators.

#ifndef FAIRCC_GRAPH_H_
#define FAIRCC_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace faircc {

using VertexId = int;
using ColorId = int;
using ClusterId = int;

enum class Sign : std::uint8_t { kNegative = 0, kPositive = 1 };

// Complete graph on n vertices with a +/- label on every unordered pair.
//
// Signs are stored as one bit row per vertex (bit v of row u set iff {u,v} is
// positive). Rows are kept symmetric and the diagonal is always clear.
class SignedCompleteGraph {
 public:
  // All pairs start positive. Requires n >= 1.
  explicit SignedCompleteGraph(int n, Sign initial = Sign::kPositive);

  // Unlisted pairs are positive. Edges must satisfy u < v and be in range.
  static SignedCompleteGraph FromNegativeEdges(
      int n, std::span<const std::pair<VertexId, VertexId>> negative_edges);

  int num_vertices() const { return n_; }
  std::int64_t num_pairs() const {
    return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }

  Sign sign(VertexId u, VertexId v) const {
    return IsPositive(u, v) ? Sign::kPositive : Sign::kNegative;
  }
  bool IsPositive(VertexId u, VertexId v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  bool IsNegative(VertexId u, VertexId v) const {
    return u != v && !IsPositive(u, v);
  }

  void SetSign(VertexId u, VertexId v, Sign s);

  // Number of positive neighbours of u among `vertices` (u itself skipped).
  int PositiveDegreeInto(VertexId u, std::span<const VertexId> vertices) const;

  // Number of w outside {u, v} with sign(u,w) != sign(v,w).
  int DisagreeingWitnesses(VertexId u, VertexId v) const;

  // Sorted list of negative pairs (u < v): the canonical serialized form.
  std::vector<std::pair<VertexId, VertexId>> NegativeEdges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  SignedCompleteGraph InducedSubgraph(std::span<const VertexId> vertices) const;

  friend bool operator==(const SignedCompleteGraph&,
                         const SignedCompleteGraph&) = default;

 private:
  std::span<const std::uint64_t> row(VertexId u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }
  void CheckVertex(VertexId v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Color of every vertex. Color ids are contiguous: every id in
// [0, num_colors) is used by at least one vertex.
class ColorAssignment {
 public:
  ColorAssignment() = default;
  explicit ColorAssignment(std::vector<ColorId> color_of);

  int num_vertices() const { return static_cast<int>(color_of_.size()); }
  int num_colors() const { return static_cast<int>(counts_.size()); }
  ColorId color(VertexId v) const { return color_of_[v]; }
  int count(ColorId c) const { return counts_[c]; }
  std::span<const ColorId> colors() const { return color_of_; }
  std::span<const int> counts() const { return counts_; }

  // Vertices of color c in increasing id order.
  std::vector<VertexId> VerticesOfColor(ColorId c) const;

  friend bool operator==(const ColorAssignment&,
                         const ColorAssignment&) = default;

 private:
  std::vector<ColorId> color_of_;
  std::vector<int> counts_;
};

// Allowed number of color-i vertices per base-color vertex: a cluster with
// b base vertices must hold between b*lo and b*hi vertices of color i.
struct RatioBound {
  int lo = 1;
  int hi = 1;

  bool exact() const { return lo == hi; }
  friend bool operator==(const RatioBound&, const RatioBound&) = default;
};

// Ratio constraints relative to a base color. bounds() is indexed by color id;
// the base color's own entry is unused and kept at {1, 1}.
class FairnessSpec {
 public:
  FairnessSpec() = default;
  FairnessSpec(ColorId base_color, std::vector<RatioBound> bounds);

  // bounds[i] = {ratio[i], ratio[i]} for every non-base color.
  static FairnessSpec Exact(ColorId base_color, std::vector<int> ratios);
  // 1:ratio for the second color of a two-color instance, base color 0.
  static FairnessSpec TwoColor(int ratio) { return Exact(0, {1, ratio}); }
  static FairnessSpec TwoColorBounded(int lo, int hi) {
    return FairnessSpec(0, {{1, 1}, {lo, hi}});
  }

  ColorId base_color() const { return base_; }
  int num_colors() const { return static_cast<int>(bounds_.size()); }
  const RatioBound& bound(ColorId c) const { return bounds_[c]; }
  std::span<const RatioBound> bounds() const { return bounds_; }

  // True when every non-base color has lo == hi.
  bool is_exact() const;
  int max_lower() const;
  int max_upper() const;

  // Same constraints re-expressed with `new_base` as the base color. Only
  // meaningful when every bound is exactly 1:1.
  FairnessSpec WithBase(ColorId new_base) const;

  // Throws InfeasibleError (naming the color) unless the global counts admit
  // the spec: lo_i * n_base <= n_i <= hi_i * n_base for every non-base i.
  void CheckFeasible(const ColorAssignment& colors) const;

  // "1:2" for exact, "1:1..1:2" for intervals, joined by ';' across colors.
  std::string ToString() const;

  friend bool operator==(const FairnessSpec&, const FairnessSpec&) = default;

 private:
  ColorId base_ = 0;
  std::vector<RatioBound> bounds_;
};

// Cluster id of every vertex. Construction canonicalizes ids to 0..k-1 in
// order of first appearance, so equal partitions compare equal.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<ClusterId> cluster_of);

  static Clustering SingleCluster(int n) {
    return Clustering(std::vector<ClusterId>(n, 0));
  }
  static Clustering Singletons(int n);

  int num_vertices() const { return static_cast<int>(cluster_of_.size()); }
  int num_clusters() const { return num_clusters_; }
  ClusterId cluster(VertexId v) const { return cluster_of_[v]; }
  std::span<const ClusterId> labels() const { return cluster_of_; }

  // Members of each cluster, each list in increasing vertex order.
  std::vector<std::vector<VertexId>> Members() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterId> cluster_of_;
  int num_clusters_ = 0;
};

struct FairnessReport {
  // counts[k][c]: vertices of color c in cluster k.
  std::vector<std::vector<int>> counts;
  std::vector<bool> cluster_pass;
  bool pass = true;
};

struct ClusterHistogram {
  ClusterId cluster = 0;
  int size = 0;
  VertexId smallest_vertex = 0;
  std::vector<int> color_counts;

  friend bool operator==(const ClusterHistogram&,
                         const ClusterHistogram&) = default;
};

// Negative pairs inside a cluster plus positive pairs across clusters.
std::int64_t Disagreements(const SignedCompleteGraph& g, const Clustering& c);
std::int64_t Agreements(const SignedCompleteGraph& g, const Clustering& c);

// A cluster passes iff it holds b >= 1 base vertices and, for every non-base
// color i, b*lo_i <= n_i <= b*hi_i.
FairnessReport CheckFairness(const ColorAssignment& colors, const Clustering& c,
                             const FairnessSpec& spec);

bool ClusterIsFair(std::span<const int> color_counts, const FairnessSpec& spec);

// Per-cluster color histogram, largest clusters first; ties go to the cluster
// holding the smallest vertex id.
std::vector<ClusterHistogram> ColorDistribution(const ColorAssignment& colors,
                                                const Clustering& c);

}  // namespace faircc

#endif  // FAIRCC_GRAPH_H_
