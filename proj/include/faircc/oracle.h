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

// Brute-force ground truth for small instances: optimal clusterings by set
// partition enumeration, optimal b-matchings by assignment enumeration, and
// the mirror-graph reduction instance.

#ifndef FAIRCC_ORACLE_H_
#define FAIRCC_ORACLE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "faircc/bmatching.h"
#include "faircc/graph.h"
#include "faircc/random.h"

namespace faircc {

struct OracleLimit {
  int max_n = 10;  // partition enumeration
  int max_r = 8;   // matching enumeration

  // Defaults, with max_n overridden by FAIRCC_ORACLE_MAX_N when set.
  static OracleLimit FromEnvironment();
};

struct OracleResult {
  Clustering clustering;
  std::int64_t value = 0;
};

// Calls `visit` with the restricted growth string of every set partition of
// {0..n-1}, in lexicographic order. Returns the number of partitions visited.
std::int64_t ForEachPartition(int n,
                              const std::function<void(std::span<const int>)>&
                                  visit);

// Minimum disagreements over all partitions. Ties resolve to the
// lexicographically smallest growth string.
OracleResult OptimalClustering(const SignedCompleteGraph& g,
                               const OracleLimit& limit = {});

// Minimum disagreements over partitions whose every block passes the spec.
OracleResult OptimalFairClustering(const SignedCompleteGraph& g,
                                   const ColorAssignment& colors,
                                   const FairnessSpec& spec,
                                   const OracleLimit& limit = {});

// Exhaustive b-matching over all L^R right-to-left assignments.
BMatching OptimalBMatching(const BMatchingInstance& instance,
                           const OracleLimit& limit = {});

struct MirrorInstance {
  SignedCompleteGraph graph;
  ColorAssignment colors;
};

// 2n-vertex reduction instance. Vertices 0..n-1 copy G and carry color 1;
// vertex n+u is the mirror of u and carries color 0 (the base color).
// Mirror pairs are positive; every other pair copies the sign of the
// corresponding pair of G.
MirrorInstance MirrorGraph(const SignedCompleteGraph& g);

// Lifts a clustering of G to the mirror instance by placing each u together
// with its mirror. Always 1:1 fair.
Clustering MirrorPairing(const Clustering& c);

// Random instances for property sweeps: each pair is negative with the
// given probability.
SignedCompleteGraph RandomSignedGraph(int n, double negative_probability,
                                      Rng& rng);

// counts[c] vertices of color c, in a shuffled vertex order.
ColorAssignment RandomColoring(const std::vector<int>& counts, Rng& rng);

}  // namespace faircc

#endif  // FAIRCC_ORACLE_H_
