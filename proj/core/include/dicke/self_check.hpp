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

// Cross-validation of every module: closed forms against the numeric
// solver, closed-form spectra against numeric diagonalization, algebraic
// identities of the operators and the two existence scans for the combined
// drive. Used by `dicke check`.

#include <string>
#include <vector>

namespace dicke {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;  // worst observed deviation (or a count for scans)
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SelfCheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

SelfCheckReport self_check();

}  // namespace dicke
