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

#include "faircc/ingest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

#include "faircc/error.h"
#include "faircc/io.h"
#include "faircc/random.h"

namespace faircc {
namespace {

// Similarities within this distance of tau count as reaching it.
constexpr double kTauSlack = 1e-12;

ColumnKind ParseKind(const std::string& kind, const std::string& where) {
  if (kind == "categorical") return ColumnKind::kCategorical;
  if (kind == "numeric") return ColumnKind::kNumeric;
  if (kind == "id") return ColumnKind::kId;
  if (kind == "protected") return ColumnKind::kProtected;
  throw SchemaError(where + ": unknown column kind '" + kind + "'");
}

// Splits CSV text into records. Handles quoted fields with "" escapes and
// quoted newlines; `lines` receives the 1-based line each record starts on.
std::vector<std::vector<std::string>> SplitCsv(const std::string& text,
                                               const std::string& where,
                                               std::vector<long>& lines) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  long line = 1;
  long record_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      records.push_back(std::move(record));
      lines.push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (field_started && !field.empty()) {
          throw ParseError(where, line, "stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field += ch;
        field_started = true;
    }
  }
  if (in_quotes) throw ParseError(where, record_line, "unterminated quote");
  if (!field.empty() || !record.empty()) end_record();
  return records;
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(const std::string& s, double& value) {
  const std::string t = Trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  value = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(value);
}

}  // namespace

// ---------------------------------------------------------------------------
// Schema

Schema Schema::FromJsonText(const std::string& text, const std::string& where) {
  const Json j = ParseJson(text, where);
  if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array()) {
    throw SchemaError(where + ": expected {\"columns\": [...]}");
  }
  Schema schema;
  for (const Json& col : j["columns"]) {
    if (!col.is_object() || !col.contains("name") || !col.contains("kind") ||
        !col["name"].is_string() || !col["kind"].is_string()) {
      throw SchemaError(where + ": each column needs string 'name' and 'kind'");
    }
    schema.columns.push_back(
        {col["name"].get<std::string>(),
         ParseKind(col["kind"].get<std::string>(), where)});
  }
  for (std::size_t a = 0; a < schema.columns.size(); ++a) {
    for (std::size_t b = a + 1; b < schema.columns.size(); ++b) {
      if (schema.columns[a].name == schema.columns[b].name) {
        throw SchemaError(where + ": duplicate column '" +
                          schema.columns[a].name + "'");
      }
    }
  }
  schema.protected_column();
  return schema;
}

Schema Schema::Read(const std::string& path) {
  return FromJsonText(ReadTextFile(path), path);
}

int Schema::protected_column() const {
  int found = -1;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].kind != ColumnKind::kProtected) continue;
    if (found >= 0) throw SchemaError("schema marks more than one protected column");
    found = static_cast<int>(i);
  }
  if (found < 0) throw SchemaError("schema marks no protected column");
  return found;
}

std::vector<std::string> TabularDataset::ProtectedValues() const {
  const int p = schema.protected_column();
  std::vector<std::string> values;
  for (const auto& row : rows) {
    if (std::find(values.begin(), values.end(), row[p]) == values.end()) {
      values.push_back(row[p]);
    }
  }
  return values;
}

bool IsMissing(const std::string& cell) {
  const std::string t = Trim(cell);
  return t.empty() || t == "?" || t == "NA" || t == "NaN";
}

// ---------------------------------------------------------------------------
// Loading

LoadReport LoadCsvText(const std::string& text, const Schema& schema,
                       const std::string& where) {
  const int protected_col = schema.protected_column();
  std::vector<long> lines;
  const auto records = SplitCsv(text, where, lines);
  if (records.empty()) throw ParseError(where + ": missing header");

  const auto& header = records[0];
  const std::size_t width = header.size();
  std::vector<int> source_of(schema.columns.size(), -1);
  for (std::size_t h = 0; h < width; ++h) {
    const std::string name = Trim(header[h]);
    auto it = std::find_if(schema.columns.begin(), schema.columns.end(),
                           [&](const Column& c) { return c.name == name; });
    if (it == schema.columns.end()) {
      throw SchemaError(where + ": column '" + name + "' is not in the schema");
    }
    const auto idx = it - schema.columns.begin();
    if (source_of[idx] >= 0) {
      throw SchemaError(where + ": header repeats column '" + name + "'");
    }
    source_of[idx] = static_cast<int>(h);
  }
  for (std::size_t c = 0; c < schema.columns.size(); ++c) {
    if (source_of[c] < 0) {
      throw SchemaError(where + ": schema column '" + schema.columns[c].name +
                        "' missing from header");
    }
  }

  LoadReport report;
  report.dataset.schema = schema;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != width) {
      throw ParseError(where, lines[r],
                       "expected " + std::to_string(width) + " fields, got " +
                           std::to_string(rec.size()));
    }
    std::vector<std::string> row(schema.columns.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
      row[c] = Trim(rec[source_of[c]]);
      if (schema.columns[c].kind == ColumnKind::kNumeric && !IsMissing(row[c])) {
        double unused;
        if (!ParseDouble(row[c], unused)) {
          throw ParseError(where, lines[r],
                           "column '" + schema.columns[c].name +
                               "' is not numeric: '" + row[c] + "'");
        }
      }
    }
    if (IsMissing(row[protected_col])) {
      ++report.dropped;
      report.dropped_lines.push_back(lines[r]);
      continue;
    }
    report.dataset.rows.push_back(std::move(row));
  }
  return report;
}

LoadReport LoadCsv(const std::string& path, const Schema& schema) {
  return LoadCsvText(ReadTextFile(path), schema, path);
}

// ---------------------------------------------------------------------------
// Sampling

TabularDataset Sample(const TabularDataset& ds, int n, std::uint64_t seed,
                      const std::optional<std::vector<int>>& balance) {
  if (n < 0 || n > ds.num_rows()) {
    throw InvalidInputError("sample size " + std::to_string(n) +
                            " exceeds the " + std::to_string(ds.num_rows()) +
                            " available rows");
  }
  std::vector<int> order(ds.num_rows());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<int>(order));

  std::vector<int> picked;
  if (!balance) {
    picked.assign(order.begin(), order.begin() + n);
  } else {
    const std::vector<std::string> values = ds.ProtectedValues();
    const std::vector<int>& weights = *balance;
    if (weights.size() != values.size()) {
      throw InvalidInputError("balance lists " + std::to_string(weights.size()) +
                              " weights for " + std::to_string(values.size()) +
                              " protected values");
    }
    int total = 0;
    for (int w : weights) {
      if (w < 1) throw InvalidInputError("balance weights must be >= 1");
      total += w;
    }
    if (n % total != 0) {
      throw InvalidInputError("sample size " + std::to_string(n) +
                              " is not a multiple of the balance total " +
                              std::to_string(total));
    }
    const int unit = n / total;
    const int p = ds.schema.protected_column();
    std::map<std::string, int> color_of;
    for (std::size_t c = 0; c < values.size(); ++c) {
      color_of[values[c]] = static_cast<int>(c);
    }
    std::vector<int> available(values.size(), 0);
    for (const auto& row : ds.rows) ++available[color_of[row[p]]];
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (available[c] < unit * weights[c]) {
        throw InfeasibleError("protected value '" + values[c] + "' has " +
                              std::to_string(available[c]) +
                              " rows, balance needs " +
                              std::to_string(unit * weights[c]));
      }
    }
    std::vector<int> taken(values.size(), 0);
    for (int r : order) {
      const int c = color_of[ds.rows[r][p]];
      if (taken[c] < unit * weights[c]) {
        ++taken[c];
        picked.push_back(r);
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  TabularDataset out;
  out.schema = ds.schema;
  out.rows.reserve(picked.size());
  for (int r : picked) out.rows.push_back(ds.rows[r]);
  return out;
}

// ---------------------------------------------------------------------------
// Graph construction

std::vector<NumericRange> ComputeNumericScaling(const TabularDataset& ds) {
  std::vector<NumericRange> scaling(ds.schema.columns.size());
  for (std::size_t c = 0; c < scaling.size(); ++c) {
    if (ds.schema.columns[c].kind != ColumnKind::kNumeric) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& row : ds.rows) {
      double x;
      if (IsMissing(row[c]) || !ParseDouble(row[c], x)) continue;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (lo > hi) lo = hi = 0.0;
    scaling[c] = {lo, hi};
  }
  return scaling;
}

double RowSimilarity(const TabularDataset& ds,
                     const std::vector<NumericRange>& scaling, int a, int b) {
  double total = 0.0;
  int used = 0;
  const auto& ra = ds.rows[a];
  const auto& rb = ds.rows[b];
  for (std::size_t c = 0; c < ds.schema.columns.size(); ++c) {
    switch (ds.schema.columns[c].kind) {
      case ColumnKind::kCategorical:
        total += ra[c] == rb[c] ? 1.0 : 0.0;
        ++used;
        break;
      case ColumnKind::kNumeric: {
        ++used;
        const bool ma = IsMissing(ra[c]);
        const bool mb = IsMissing(rb[c]);
        if (ma || mb) {
          total += (ma && mb) ? 1.0 : 0.0;
          break;
        }
        double x = 0.0;
        double y = 0.0;
        ParseDouble(ra[c], x);
        ParseDouble(rb[c], y);
        const double span = scaling[c].max - scaling[c].min;
        if (span <= 0.0) {
          total += 1.0;
        } else {
          total += 1.0 - std::min(1.0, std::abs(x - y) / span);
        }
        break;
      }
      case ColumnKind::kId:
      case ColumnKind::kProtected:
        break;
    }
  }
  return used == 0 ? 1.0 : total / used;
}

IngestedGraph BuildGraph(const TabularDataset& ds, const SimilarityConfig& cfg) {
  if (ds.num_rows() < 2) {
    throw InvalidInputError("graph construction needs at least 2 rows, got " +
                            std::to_string(ds.num_rows()));
  }
  if (!(cfg.tau >= 0.0 && cfg.tau <= 1.0)) {
    throw InvalidInputError("tau must lie in [0, 1]");
  }
  const std::vector<NumericRange> scaling =
      cfg.numeric_scaling.empty() ? ComputeNumericScaling(ds)
                                  : cfg.numeric_scaling;
  if (scaling.size() != ds.schema.columns.size()) {
    throw InvalidInputError("numeric scaling must have one entry per column");
  }
  const int n = ds.num_rows();
  IngestedGraph out;
  out.graph = SignedCompleteGraph(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (RowSimilarity(ds, scaling, a, b) < cfg.tau - kTauSlack) {
        out.graph.SetSign(a, b, Sign::kNegative);
      }
    }
  }
  out.color_names = ds.ProtectedValues();
  const int p = ds.schema.protected_column();
  std::vector<ColorId> color_of(n);
  for (int r = 0; r < n; ++r) {
    color_of[r] = static_cast<ColorId>(
        std::find(out.color_names.begin(), out.color_names.end(),
                  ds.rows[r][p]) -
        out.color_names.begin());
  }
  out.colors = ColorAssignment(std::move(color_of));
  return out;
}

}  // namespace faircc
