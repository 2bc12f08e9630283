// Copyright 2026 The tac-orient Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tacorient {

/// Broad failure categories. The C API maps each one onto a status code.
enum class ErrorKind {
  kParse,            // malformed input text
  kInvalidArgument,  // precondition violated by the caller
  kDomain,           // input is well-formed but outside the operation's domain
  kCapacity,         // a configured size cap was exceeded
  kInternal,         // an invariant the library guarantees did not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  /// 1-based line number of the offending input line.
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tacorient
