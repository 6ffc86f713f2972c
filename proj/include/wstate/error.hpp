// Copyright 2026 The wstate Authors
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

#ifndef WSTATE_ERROR_HPP
#define WSTATE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wstate {

/// What went wrong. CLI maps CapExceeded/BudgetExceeded to exit code 3,
/// Parse to exit code 2, everything else to a library bug or misuse.
enum class ErrorKind {
  Loop,                   ///< attempted self-loop edge
  UnknownVertex,
  UnknownEdge,
  DuplicateVertex,
  BadLabel,               ///< empty label or label with whitespace/'#'
  Precondition,           ///< documented precondition violated
  CapExceeded,            ///< enumeration size cap exceeded
  BudgetExceeded,         ///< colouring budget exceeded
  RedMonochromaticEdge,   ///< input guard for W-state operations
  NonBichromaticGlueEdge, ///< W-union along a monochromatic edge
  IllegalDeletion,        ///< deletion would strip a last red half-edge
  NotSeparationPair,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace wstate

#endif  // WSTATE_ERROR_HPP
