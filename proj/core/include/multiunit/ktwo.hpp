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

#include <array>

#include "multiunit/revenue.hpp"

namespace multiunit {

// Candidate structure for the two-level menu, identified by which coupling
// of the two per-unit thresholds it optimizes.
enum class KTwoCase {
  kSeparateMonopoly = 0,  // each threshold at its own monopoly point
  kLinkedPair = 1,        // lower threshold serves both demands, upper free
  kEqualThresholds = 2,   // one common threshold
  kBundleOnly = 3,        // upper threshold drives both, v1 = (d2/d1) v2
};

struct KTwoCandidate {
  double v1 = 0.0;
  double v2 = 0.0;
  // Expected revenue of the menu implied by (v1, v2), or -infinity when the
  // candidate's feasibility constraint fails.
  double revenue = 0.0;
};

struct KTwoSolution {
  double v1_star = 0.0;
  double v2_star = 0.0;
  KTwoCase case_id = KTwoCase::kSeparateMonopoly;
  PriceVector prices;
  double revenue = 0.0;
};

// Maximizer of v (1 - F(v)) over [0, v_bar] by golden-section search to
// tolerance 1e-10; the demand size scales the objective without moving the
// argmax.  On a flat top any maximizing point may be returned.
double monopoly_threshold(const Marginal& m, int d);

// The four threshold candidates, each solved as a 1-D concave problem in
// its own coupling; infeasible candidates carry revenue = -infinity.
// Requires k == 2.
std::array<KTwoCandidate, 4> candidate_objectives(const ProblemInstance& inst);

// Best feasible candidate mapped to menu prices:
//   v1 <= v2              -> (v1 d1, v2 d2 - (v2 - v1) d1)
//   v2 <= v1, v1 d1 <= v2 d2 -> (v1 d1, v2 d2)
//   otherwise             -> (v2 d2, v2 d2)
// Revenue ties prefer the lower case id.  Throws std::invalid_argument if
// k != 2.
KTwoSolution solve_k2(const ProblemInstance& inst);

const char* to_string(KTwoCase c);

}  // namespace multiunit
