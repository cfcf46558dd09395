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

// File formats.
//
//   graph JSON       {"n": 4, "negative_edges": [[0, 2], [1, 3]]}
//                    0-based ids, u < v; unlisted pairs are positive.
//   colors CSV       one "vertex_id,color_id" line per vertex; an optional
//                    "vertex_id,color_id" header is accepted.
//   clustering JSON  {"cluster_of": [0, 0, 1, ...]}

#ifndef FAIRCC_IO_H_
#define FAIRCC_IO_H_

#include <string>

#include "faircc/faircc.h"
#include "faircc/graph.h"
#include "json.hpp"

namespace faircc {

using Json = nlohmann::ordered_json;

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

Json GraphToJson(const SignedCompleteGraph& g);
SignedCompleteGraph GraphFromJson(const Json& j);
SignedCompleteGraph ReadGraphJson(const std::string& path);
void WriteGraphJson(const std::string& path, const SignedCompleteGraph& g);

std::string ColorsToCsv(const ColorAssignment& colors);
ColorAssignment ColorsFromCsv(const std::string& text,
                              const std::string& where = "<colors>");
ColorAssignment ReadColorsCsv(const std::string& path);
void WriteColorsCsv(const std::string& path, const ColorAssignment& colors);

Json ClusteringToJson(const Clustering& c);
Clustering ClusteringFromJson(const Json& j);
Clustering ReadClusteringJson(const std::string& path);
void WriteClusteringJson(const std::string& path, const Clustering& c);

// Debug dump of per-color cost tables and solved matchings.
Json MatchingsToJson(const FairMatchings& matchings);

// Parses JSON text; syntax errors become ParseError.
Json ParseJson(const std::string& text, const std::string& where);

// Two-space indented dump with a trailing newline.
std::string DumpJson(const Json& j);

}  // namespace faircc

#endif  // FAIRCC_IO_H_
