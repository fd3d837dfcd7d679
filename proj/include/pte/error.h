// Copyright 2026 The PTE Solver Authors.
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

#ifndef PTE_ERROR_H_
#define PTE_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace pte {

enum class ErrorKind {
  kLookup,        // Unknown identifier.
  kDomain,        // Argument outside the operation's domain.
  kInput,         // Malformed caller-provided data (matrices, setups).
  kParse,         // Document could not be parsed.
  kPrecondition,  // Structural precondition not met (e.g. non-canonical game).
  kGeneration,    // Random generator could not satisfy its parameters.
  kInternal,      // Broken internal invariant.
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Document-level failure. `code` is a stable machine-readable tag such as
// "SYNTAX", "UNKNOWN_KEY" or "DUPLICATE_ID"; `path` is a JSON pointer to the
// offending element (empty for syntax errors, which carry a byte offset in the
// message instead).
class ParseError : public Error {
 public:
  ParseError(std::string code, std::string path, const std::string& message)
      : Error(ErrorKind::kParse,
              code + (path.empty() ? "" : " at " + path) + ": " + message),
        code_(std::move(code)),
        path_(std::move(path)) {}

  const std::string& code() const { return code_; }
  const std::string& path() const { return path_; }

 private:
  std::string code_;
  std::string path_;
};

}  // namespace pte

#endif  // PTE_ERROR_H_
