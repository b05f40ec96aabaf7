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

#include <cstdint>
#include <vector>

#include "multiunit/revenue.hpp"

namespace multiunit {

struct OptimizeConfig {
  long long max_iters = 4000;
  // Stop a restart once a polish pass around the incumbent improves the
  // objective by less than this.
  double tol = 1e-9;
  // Initial ascent step; step t is eta0 / t^decay.  Non-positive means
  // auto-scale to a tenth of the price range d_k v_bar.
  double eta0 = 0.0;
  double decay = 0.5;
  int restarts = 5;
  std::uint64_t seed = 1;
};

struct OptimizeResult {
  PriceVector p_star;
  double rev_star = 0.0;
  long long iterations = 0;
  // Largest one-sided directional derivative along feasible coordinate
  // moves at p_star (finite differences); small values certify first-order
  // optimality.
  double certificate = 0.0;
  // False when some marginal failed the concavity check, in which case the
  // result is a stationary point but not certified globally optimal.
  bool dmr_certified = true;
};

// Euclidean projection onto {0 <= p_1 <= ... <= p_k <= upper}:
// pool-adjacent-violators for the ordering, then box clipping.
PriceVector project_ordered(const std::vector<double>& raw, double upper);

// Projected supergradient ascent over menu prices with diminishing steps,
// best-iterate tracking, and multi-restart, finished by cyclic 1-D polish.
// Ascent runs in the increment coordinates c_i = p_i - p_{i-1}, boxed by
// c_i <= (d_i - d_{i-1}) v_bar; the revenue function is concave there and
// the box loses no revenue: any menu outside it only moves prices of
// bundles nobody buys.  Throws NumericalError on a non-finite objective.
OptimizeResult maximize(const ProblemInstance& inst,
                        const OptimizeConfig& cfg = {});

// Exhaustive search over the ordered lattice {0, h, 2h, ...}^k with
// h = d_k v_bar / (resolution - 1), keeping p_1 <= ... <= p_k.  The
// acceptance oracle for small k.  Throws std::invalid_argument if
// resolution < 2.
OptimizeResult grid_search(const ProblemInstance& inst, int resolution);

// grid_search followed by `rounds` re-grids of the same resolution on a
// shrinking box around the incumbent; spacing contracts by 2/(resolution-1)
// per round.
OptimizeResult grid_search_refined(const ProblemInstance& inst, int resolution,
                                   int rounds = 3);

// Largest one-sided finite-difference slope (step h) of rev along feasible
// single-coordinate moves at p: raising p_m while staying under p_{m+1} and
// the price cap, or lowering it while staying above p_{m-1}.
double optimality_certificate(const PriceVector& p, const ProblemInstance& inst,
                              double h = 1e-5);

}  // namespace multiunit
