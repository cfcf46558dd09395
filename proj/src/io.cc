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

#include "faircc/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "faircc/error.h"

namespace faircc {

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << contents;
  if (!out) throw InvalidInputError("write failed for " + path);
}

Json ParseJson(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

namespace {

template <typename T>
T Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Json GraphToJson(const SignedCompleteGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.NegativeEdges()) edges.push_back({u, v});
  Json j;
  j["n"] = g.num_vertices();
  j["negative_edges"] = std::move(edges);
  return j;
}

SignedCompleteGraph GraphFromJson(const Json& j) {
  const int n = Field<int>(j, "n", "graph");
  const auto edges =
      Field<std::vector<std::pair<int, int>>>(j, "negative_edges", "graph");
  if (n < 1) throw ParseError("graph: n must be >= 1");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v >= n || u >= v) {
      throw ParseError("graph: negative edge [" + std::to_string(u) + "," +
                       std::to_string(v) + "] must satisfy 0 <= u < v < n");
    }
  }
  return SignedCompleteGraph::FromNegativeEdges(n, edges);
}

SignedCompleteGraph ReadGraphJson(const std::string& path) {
  return GraphFromJson(ParseJson(ReadTextFile(path), path));
}

void WriteGraphJson(const std::string& path, const SignedCompleteGraph& g) {
  WriteTextFile(path, DumpJson(GraphToJson(g)));
}

// ---------------------------------------------------------------------------
// Colors

std::string ColorsToCsv(const ColorAssignment& colors) {
  std::string out;
  for (VertexId v = 0; v < colors.num_vertices(); ++v) {
    out += std::to_string(v) + "," + std::to_string(colors.color(v)) + "\n";
  }
  return out;
}

namespace {

bool ParseInt(std::string_view s, int& value) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ColorAssignment ColorsFromCsv(const std::string& text,
                              const std::string& where) {
  std::vector<std::pair<int, int>> entries;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "vertex_id,color_id") continue;
    const auto comma = line.find(',');
    int vertex = 0;
    int color = 0;
    if (comma == std::string::npos ||
        !ParseInt(std::string_view(line).substr(0, comma), vertex) ||
        !ParseInt(std::string_view(line).substr(comma + 1), color)) {
      throw ParseError(where, line_no, "expected 'vertex_id,color_id'");
    }
    entries.emplace_back(vertex, color);
  }
  const int n = static_cast<int>(entries.size());
  std::vector<ColorId> color_of(n, -1);
  for (const auto& [v, c] : entries) {
    if (v < 0 || v >= n || color_of[v] >= 0) {
      throw ParseError(where + ": vertex ids must be a permutation of 0.." +
                       std::to_string(n - 1));
    }
    if (c < 0) throw ParseError(where + ": negative color id");
    color_of[v] = c;
  }
  try {
    return ColorAssignment(std::move(color_of));
  } catch (const InvalidInputError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

ColorAssignment ReadColorsCsv(const std::string& path) {
  return ColorsFromCsv(ReadTextFile(path), path);
}

void WriteColorsCsv(const std::string& path, const ColorAssignment& colors) {
  WriteTextFile(path, ColorsToCsv(colors));
}

// ---------------------------------------------------------------------------
// Clustering

Json ClusteringToJson(const Clustering& c) {
  Json j;
  j["cluster_of"] = std::vector<int>(c.labels().begin(), c.labels().end());
  return j;
}

Clustering ClusteringFromJson(const Json& j) {
  auto ids = Field<std::vector<int>>(j, "cluster_of", "clustering");
  for (int k : ids) {
    if (k < 0) throw ParseError("clustering: cluster ids must be >= 0");
  }
  return Clustering(std::move(ids));
}

Clustering ReadClusteringJson(const std::string& path) {
  return ClusteringFromJson(ParseJson(ReadTextFile(path), path));
}

void WriteClusteringJson(const std::string& path, const Clustering& c) {
  WriteTextFile(path, DumpJson(ClusteringToJson(c)));
}

// ---------------------------------------------------------------------------
// Debug dump

Json MatchingsToJson(const FairMatchings& matchings) {
  Json out;
  out["base_color"] = matchings.base_color;
  out["base_vertices"] = matchings.base_vertices;
  Json per_color = Json::array();
  for (const ColorMatching& cm : matchings.per_color) {
    Json entry;
    entry["color"] = cm.color;
    entry["vertices"] = cm.vertices;
    Json rows = Json::array();
    for (Eigen::Index l = 0; l < cm.cost.rows(); ++l) {
      std::vector<std::int64_t> row(cm.cost.cols());
      for (Eigen::Index r = 0; r < cm.cost.cols(); ++r) row[r] = cm.cost(l, r);
      rows.push_back(std::move(row));
    }
    entry["cost"] = std::move(rows);
    entry["assign"] = cm.matching.assign;
    entry["weight"] = cm.matching.weight;
    per_color.push_back(std::move(entry));
  }
  out["matchings"] = std::move(per_color);
  return out;
}

}  // namespace faircc
