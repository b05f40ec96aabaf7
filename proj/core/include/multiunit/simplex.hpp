// Copyright 2026 The Multiunit Pricing Authors.
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

#include <vector>

namespace multiunit {

// Small dense linear program in standard inequality form:
//   maximize c.x  subject to  A x <= b,  x >= 0,
// with b >= 0 so the all-slack basis is feasible from the start.
struct LpProblem {
  std::vector<double> c;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

enum class LpStatus { kOptimal, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  std::vector<double> x;
  double objective = 0.0;
  long long pivots = 0;
};

// Primal simplex on a dense tableau.  Dantzig pricing with a lexicographic
// ratio test: ties in the minimum ratio are resolved by comparing rows of
// the running basis inverse, which keeps every basic row lexicographically
// positive and rules out cycling under any pricing rule.  Throws
// std::invalid_argument on malformed input (including any b < 0).
LpResult solve_lp(const LpProblem& lp, long long max_pivots = 200000);

}  // namespace multiunit
