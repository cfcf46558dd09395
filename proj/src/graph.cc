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

#include "faircc/graph.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "faircc/error.h"

namespace faircc {

// ---------------------------------------------------------------------------
// SignedCompleteGraph

SignedCompleteGraph::SignedCompleteGraph(int n, Sign initial) : n_(n) {
  if (n < 1) {
    throw InvalidInputError("graph needs at least one vertex, got " +
                            std::to_string(n));
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * n, 0);
  if (initial == Sign::kPositive) {
    for (VertexId u = 0; u < n; ++u) {
      std::uint64_t* r = bits_.data() + u * words_;
      for (VertexId v = 0; v < n; ++v) {
        if (v != u) r[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
  }
}

SignedCompleteGraph SignedCompleteGraph::FromNegativeEdges(
    int n, std::span<const std::pair<VertexId, VertexId>> negative_edges) {
  SignedCompleteGraph g(n);
  for (const auto& [u, v] : negative_edges) {
    if (u < 0 || v >= n || u >= v) {
      throw InvalidInputError("negative edge [" + std::to_string(u) + "," +
                              std::to_string(v) +
                              "] must satisfy 0 <= u < v < n");
    }
    g.SetSign(u, v, Sign::kNegative);
  }
  return g;
}

void SignedCompleteGraph::CheckVertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInputError("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n_));
  }
}

void SignedCompleteGraph::SetSign(VertexId u, VertexId v, Sign s) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw InvalidInputError("self pairs carry no sign");
  std::uint64_t* ru = bits_.data() + u * words_;
  std::uint64_t* rv = bits_.data() + v * words_;
  const std::uint64_t mu = std::uint64_t{1} << (u & 63);
  const std::uint64_t mv = std::uint64_t{1} << (v & 63);
  if (s == Sign::kPositive) {
    ru[v >> 6] |= mv;
    rv[u >> 6] |= mu;
  } else {
    ru[v >> 6] &= ~mv;
    rv[u >> 6] &= ~mu;
  }
}

int SignedCompleteGraph::PositiveDegreeInto(
    VertexId u, std::span<const VertexId> vertices) const {
  int degree = 0;
  for (VertexId v : vertices) {
    if (v != u && IsPositive(u, v)) ++degree;
  }
  return degree;
}

int SignedCompleteGraph::DisagreeingWitnesses(VertexId u, VertexId v) const {
  CheckVertex(u);
  CheckVertex(v);
  const auto ru = row(u);
  const auto rv = row(v);
  int differing = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    differing += std::popcount(ru[w] ^ rv[w]);
  }
  // Columns u and v each differ exactly when {u,v} is positive.
  if (u != v && IsPositive(u, v)) differing -= 2;
  return differing;
}

std::vector<std::pair<VertexId, VertexId>> SignedCompleteGraph::NegativeEdges()
    const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = u + 1; v < n_; ++v) {
      if (!IsPositive(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SignedCompleteGraph SignedCompleteGraph::InducedSubgraph(
    std::span<const VertexId> vertices) const {
  const int m = static_cast<int>(vertices.size());
  for (VertexId v : vertices) CheckVertex(v);
  SignedCompleteGraph sub(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (vertices[i] == vertices[j]) {
        throw InvalidInputError("induced subgraph vertices must be distinct");
      }
      if (!IsPositive(vertices[i], vertices[j])) {
        sub.SetSign(i, j, Sign::kNegative);
      }
    }
  }
  return sub;
}

// ---------------------------------------------------------------------------
// ColorAssignment

ColorAssignment::ColorAssignment(std::vector<ColorId> color_of)
    : color_of_(std::move(color_of)) {
  ColorId max_color = -1;
  for (ColorId c : color_of_) {
    if (c < 0) throw InvalidInputError("color ids must be non-negative");
    max_color = std::max(max_color, c);
  }
  counts_.assign(max_color + 1, 0);
  for (ColorId c : color_of_) ++counts_[c];
  for (ColorId c = 0; c <= max_color; ++c) {
    if (counts_[c] == 0) {
      throw InvalidInputError("color ids must be contiguous; color " +
                              std::to_string(c) + " is unused");
    }
  }
}

std::vector<VertexId> ColorAssignment::VerticesOfColor(ColorId c) const {
  std::vector<VertexId> out;
  out.reserve(c >= 0 && c < num_colors() ? counts_[c] : 0);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (color_of_[v] == c) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FairnessSpec

FairnessSpec::FairnessSpec(ColorId base_color, std::vector<RatioBound> bounds)
    : base_(base_color), bounds_(std::move(bounds)) {
  if (base_ < 0 || base_ >= num_colors()) {
    throw InvalidInputError("base color " + std::to_string(base_) +
                            " outside the " + std::to_string(num_colors()) +
                            " specified colors");
  }
  bounds_[base_] = {1, 1};
  for (ColorId c = 0; c < num_colors(); ++c) {
    const RatioBound& b = bounds_[c];
    if (b.lo < 1 || b.lo > b.hi) {
      throw InvalidInputError("color " + std::to_string(c) + " bound 1:" +
                              std::to_string(b.lo) + "..1:" +
                              std::to_string(b.hi) +
                              " needs 1 <= lo <= hi");
    }
  }
}

FairnessSpec FairnessSpec::Exact(ColorId base_color, std::vector<int> ratios) {
  std::vector<RatioBound> bounds;
  bounds.reserve(ratios.size());
  for (int r : ratios) bounds.push_back({r, r});
  if (base_color >= 0 && base_color < static_cast<int>(bounds.size())) {
    bounds[base_color] = {1, 1};
  }
  return FairnessSpec(base_color, std::move(bounds));
}

bool FairnessSpec::is_exact() const {
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [](const RatioBound& b) { return b.exact(); });
}

int FairnessSpec::max_lower() const {
  int m = 1;
  for (ColorId c = 0; c < num_colors(); ++c) {
    if (c != base_) m = std::max(m, bounds_[c].lo);
  }
  return m;
}

int FairnessSpec::max_upper() const {
  int m = 1;
  for (ColorId c = 0; c < num_colors(); ++c) {
    if (c != base_) m = std::max(m, bounds_[c].hi);
  }
  return m;
}

FairnessSpec FairnessSpec::WithBase(ColorId new_base) const {
  return FairnessSpec(new_base, bounds_);
}

void FairnessSpec::CheckFeasible(const ColorAssignment& colors) const {
  if (colors.num_colors() != num_colors()) {
    throw InfeasibleError("spec covers " + std::to_string(num_colors()) +
                          " colors but the instance has " +
                          std::to_string(colors.num_colors()));
  }
  const std::int64_t base_count = colors.count(base_);
  for (ColorId c = 0; c < num_colors(); ++c) {
    if (c == base_) continue;
    const std::int64_t n = colors.count(c);
    if (n < bounds_[c].lo * base_count || n > bounds_[c].hi * base_count) {
      throw InfeasibleError(
          "color " + std::to_string(c) + " has " + std::to_string(n) +
          " vertices against " + std::to_string(base_count) +
          " base vertices; ratio must lie in 1:" +
          std::to_string(bounds_[c].lo) + "..1:" +
          std::to_string(bounds_[c].hi));
    }
  }
}

std::string FairnessSpec::ToString() const {
  std::string out;
  for (ColorId c = 0; c < num_colors(); ++c) {
    if (c == base_) continue;
    if (!out.empty()) out += ';';
    out += "1:" + std::to_string(bounds_[c].lo);
    if (!bounds_[c].exact()) out += "..1:" + std::to_string(bounds_[c].hi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clustering

Clustering::Clustering(std::vector<ClusterId> cluster_of)
    : cluster_of_(std::move(cluster_of)) {
  std::vector<ClusterId> remap;
  for (ClusterId& k : cluster_of_) {
    if (k < 0) throw InvalidInputError("cluster ids must be non-negative");
    if (static_cast<std::size_t>(k) >= remap.size()) remap.resize(k + 1, -1);
    if (remap[k] < 0) remap[k] = num_clusters_++;
    k = remap[k];
  }
}

Clustering Clustering::Singletons(int n) {
  std::vector<ClusterId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Clustering(std::move(ids));
}

std::vector<std::vector<VertexId>> Clustering::Members() const {
  std::vector<std::vector<VertexId>> members(num_clusters_);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    members[cluster_of_[v]].push_back(v);
  }
  return members;
}

// ---------------------------------------------------------------------------
// Evaluators

namespace {

void CheckSameLength(int expected, int got, const char* what) {
  if (expected != got) {
    throw InvalidInputError(std::string(what) + " has length " +
                            std::to_string(got) + ", expected " +
                            std::to_string(expected));
  }
}

}  // namespace

std::int64_t Disagreements(const SignedCompleteGraph& g, const Clustering& c) {
  CheckSameLength(g.num_vertices(), c.num_vertices(), "clustering");
  std::int64_t total = 0;
  const int n = g.num_vertices();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const bool together = c.cluster(u) == c.cluster(v);
      if (together != g.IsPositive(u, v)) ++total;
    }
  }
  return total;
}

std::int64_t Agreements(const SignedCompleteGraph& g, const Clustering& c) {
  return g.num_pairs() - Disagreements(g, c);
}

bool ClusterIsFair(std::span<const int> color_counts,
                   const FairnessSpec& spec) {
  const std::int64_t base = color_counts[spec.base_color()];
  if (base < 1) return false;
  for (ColorId c = 0; c < spec.num_colors(); ++c) {
    if (c == spec.base_color()) continue;
    const RatioBound& b = spec.bound(c);
    const std::int64_t n = color_counts[c];
    if (n < base * b.lo || n > base * b.hi) return false;
  }
  return true;
}

FairnessReport CheckFairness(const ColorAssignment& colors, const Clustering& c,
                             const FairnessSpec& spec) {
  CheckSameLength(colors.num_vertices(), c.num_vertices(), "clustering");
  FairnessReport report;
  const int width = std::max(colors.num_colors(), spec.num_colors());
  report.counts.assign(c.num_clusters(), std::vector<int>(width, 0));
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    ++report.counts[c.cluster(v)][colors.color(v)];
  }
  report.cluster_pass.resize(c.num_clusters());
  const bool colors_match = colors.num_colors() == spec.num_colors();
  for (ClusterId k = 0; k < c.num_clusters(); ++k) {
    const bool ok = colors_match && ClusterIsFair(report.counts[k], spec);
    report.cluster_pass[k] = ok;
    report.pass = report.pass && ok;
  }
  return report;
}

std::vector<ClusterHistogram> ColorDistribution(const ColorAssignment& colors,
                                                const Clustering& c) {
  CheckSameLength(colors.num_vertices(), c.num_vertices(), "clustering");
  std::vector<ClusterHistogram> rows(c.num_clusters());
  for (ClusterId k = 0; k < c.num_clusters(); ++k) {
    rows[k].cluster = k;
    rows[k].smallest_vertex = -1;
    rows[k].color_counts.assign(colors.num_colors(), 0);
  }
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    ClusterHistogram& row = rows[c.cluster(v)];
    ++row.size;
    ++row.color_counts[colors.color(v)];
    if (row.smallest_vertex < 0) row.smallest_vertex = v;
  }
  std::sort(rows.begin(), rows.end(),
            [](const ClusterHistogram& a, const ClusterHistogram& b) {
              if (a.size != b.size) return a.size > b.size;
              return a.smallest_vertex < b.smallest_vertex;
            });
  return rows;
}

}  // namespace faircc
