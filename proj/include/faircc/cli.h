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

#ifndef FAIRCC_CLI_H_
#define FAIRCC_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "faircc/graph.h"

namespace faircc {

// Entry point of the `faircc` tool. args[0] is the program name. Returns the
// process exit code: 0 success, 1 invalid input or failed job, 2 infeasible
// spec, 3 parse error, 4 oracle limit.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// "1:p" -> p.
int ParseRatio(const std::string& text);
// "1:p..1:q" -> {p, q}.
RatioBound ParseBounds(const std::string& text);
// "a:b:c" -> {a, b, c}.
std::vector<int> ParseWeights(const std::string& text);

// Builds a spec from repeated --ratio / --bounds values, one per non-base
// color in increasing id order (a single value applies to all of them).
// Without either flag the global count ratios are used when they are
// integral; otherwise std::nullopt.
std::optional<FairnessSpec> SpecFromFlags(
    const std::vector<std::string>& ratios,
    const std::vector<std::string>& bounds, ColorId base,
    const ColorAssignment& colors);

}  // namespace faircc

#endif  // FAIRCC_CLI_H_
