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

#ifndef FAIRCC_ERROR_H_
#define FAIRCC_ERROR_H_

#include <stdexcept>
#include <string>

namespace faircc {

enum class ErrorKind {
  kInvalidInput,
  kInfeasible,
  kParse,
  kSchema,
  kSize,
};

// Base of every exception thrown by the library. The kind drives the CLI exit
// code (see ExitCodeFor).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& message)
      : Error(ErrorKind::kInvalidInput, message) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& message)
      : Error(ErrorKind::kInfeasible, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::kParse, message) {}
  ParseError(const std::string& where, long line, const std::string& message)
      : Error(ErrorKind::kParse,
              where + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  // 1-based line number, or 0 when not tied to a line.
  long line() const { return line_; }

 private:
  long line_ = 0;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message)
      : Error(ErrorKind::kSchema, message) {}
};

// Raised when an exhaustive routine is asked to exceed its configured limit.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& message)
      : Error(ErrorKind::kSize, message) {}
};

// Process exit codes: 0 success, 1 invalid input, 2 infeasible spec,
// 3 parse/schema error, 4 oracle limit.
inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return 1;
    case ErrorKind::kInfeasible:
      return 2;
    case ErrorKind::kParse:
    case ErrorKind::kSchema:
      return 3;
    case ErrorKind::kSize:
      return 4;
  }
  return 1;
}

}  // namespace faircc

#endif  // FAIRCC_ERROR_H_
