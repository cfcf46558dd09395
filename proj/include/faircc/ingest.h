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

// Tabular CSV -> colored signed complete graph.
//
// Each record becomes a vertex. Two records are similar in proportion to
// the mean per-column agreement over the categorical and numeric columns:
// equality for categorical values, 1 - |x - y| / (max - min) for numeric
// values normalized over the dataset. The pair is positive iff the
// similarity reaches tau. The protected column supplies the vertex colors
// and never enters the similarity.

#ifndef FAIRCC_INGEST_H_
#define FAIRCC_INGEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faircc/graph.h"

namespace faircc {

enum class ColumnKind { kCategorical, kNumeric, kId, kProtected };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::kCategorical;
};

struct Schema {
  std::vector<Column> columns;

  // {"columns": [{"name": "...", "kind": "categorical|numeric|id|protected"}]}
  static Schema FromJsonText(const std::string& text,
                             const std::string& where = "<schema>");
  static Schema Read(const std::string& path);

  int protected_column() const;
};

struct TabularDataset {
  Schema schema;
  // Cells in schema column order.
  std::vector<std::vector<std::string>> rows;

  int num_rows() const { return static_cast<int>(rows.size()); }
  // Distinct protected values in order of first appearance.
  std::vector<std::string> ProtectedValues() const;
};

struct LoadReport {
  TabularDataset dataset;
  int dropped = 0;                  // rows missing the protected value
  std::vector<long> dropped_lines;  // 1-based file lines
};

// Empty, "?", "NA" and "NaN" cells count as missing.
bool IsMissing(const std::string& cell);

LoadReport LoadCsvText(const std::string& text, const Schema& schema,
                       const std::string& where = "<csv>");
LoadReport LoadCsv(const std::string& path, const Schema& schema);

// Seeded sample of n rows. The rows are permuted with Rng(seed) and a prefix
// is taken; with `balance` (weights per protected value, in first-appearance
// order) the prefix is taken per value so counts are n * w_c / sum(w).
// Output rows keep their original relative order, and samples drawn with
// the same seed nest as n grows.
TabularDataset Sample(const TabularDataset& ds, int n, std::uint64_t seed,
                      const std::optional<std::vector<int>>& balance = {});

struct NumericRange {
  double min = 0.0;
  double max = 0.0;
};

struct SimilarityConfig {
  double tau = 0.5;
  // Per column; filled from the dataset when empty.
  std::vector<NumericRange> numeric_scaling;
};

std::vector<NumericRange> ComputeNumericScaling(const TabularDataset& ds);

// Similarity of rows a and b in [0, 1].
double RowSimilarity(const TabularDataset& ds,
                     const std::vector<NumericRange>& scaling, int a, int b);

struct IngestedGraph {
  SignedCompleteGraph graph{1};
  ColorAssignment colors;
  std::vector<std::string> color_names;  // color id -> protected value
};

IngestedGraph BuildGraph(const TabularDataset& ds, const SimilarityConfig& cfg);

}  // namespace faircc

#endif  // FAIRCC_INGEST_H_
