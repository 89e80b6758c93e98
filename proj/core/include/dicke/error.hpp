// Copyright 2026 The dicke-squeezing Authors
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
#include <string_view>

namespace dicke {

enum class ErrorKind {
  kInvalidInput,           // malformed matrix, dimension mismatch, bad grid
  kBoundViolation,         // SystemParams outside physical bounds
  kNotApplicable,          // closed form or solver does not cover this case
  kPhaseConvention,        // state outside the real-coherence regime
  kNoSteadyState,          // trivial null space
  kDegenerateSteadyState,  // more than one null direction
  kIntegrationFailure,     // propagation drifted, dt too large
  kConsistency,            // two independent routes disagree
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers (the CLI)
/// map failures to exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by user input rather than numerics.
  bool is_usage_error() const noexcept {
    return kind_ == ErrorKind::kInvalidInput ||
           kind_ == ErrorKind::kBoundViolation ||
           kind_ == ErrorKind::kNotApplicable;
  }

 private:
  ErrorKind kind_;
};

}  // namespace dicke
