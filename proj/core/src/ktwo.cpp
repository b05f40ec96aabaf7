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

#include "multiunit/ktwo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "multiunit/numeric.hpp"

namespace multiunit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PriceVector map_to_prices(double v1, double v2, const ProblemInstance& inst) {
  const double d1 = inst.demand(1);
  const double d2 = inst.demand(2);
  if (v1 <= v2)
    return PriceVector({v1 * d1, v2 * d2 - (v2 - v1) * d1});
  if (v1 * d1 <= v2 * d2) return PriceVector({v1 * d1, v2 * d2});
  return PriceVector({v2 * d2, v2 * d2});
}

double menu_revenue(double v1, double v2, const ProblemInstance& inst) {
  return rev(map_to_prices(v1, v2, inst), inst);
}

}  // namespace

double monopoly_threshold(const Marginal& m, int d) {
  if (d < 1) throw std::invalid_argument("monopoly_threshold: demand must be >= 1");
  return golden_max([&](double v) { return m.revenue_curve(v); }, 0.0,
                    m.v_bar(), 1e-10);
}

std::array<KTwoCandidate, 4> candidate_objectives(const ProblemInstance& inst) {
  if (inst.k() != 2)
    throw std::invalid_argument("candidate_objectives: instance must have k=2");
  const Marginal& m1 = inst.marginal(1);
  const Marginal& m2 = inst.marginal(2);
  const double q1 = inst.weight(1), q2 = inst.weight(2);
  const double d1 = inst.demand(1), d2 = inst.demand(2);
  const double v_bar = inst.v_bar();
  const double tol = 1e-10 * std::max(1.0, v_bar);

  std::array<KTwoCandidate, 4> out;

  // Decoupled monopoly thresholds; feasible when they already satisfy the
  // ordering the price map needs: v2 <= v1 <= (d2/d1) v2.
  const double v1_hat = monopoly_threshold(m1, static_cast<int>(d1));
  const double v2_hat = monopoly_threshold(m2, static_cast<int>(d2));
  out[0] = {v1_hat, v2_hat, -kInf};
  if (v2_hat <= v1_hat && v1_hat * d1 <= v2_hat * d2)
    out[0].revenue = menu_revenue(v1_hat, v2_hat, inst);

  // Lower threshold sells d1 units to both demand levels, the upper one
  // stays at its monopoly point; needs v1 <= v2.
  const double v1_linked = golden_max(
      [&](double v) {
        return v * d1 *
               (q1 * (1.0 - m1.cdf_clamped(v)) + q2 * (1.0 - m2.cdf_clamped(v)));
      },
      0.0, v_bar, tol);
  out[1] = {v1_linked, v2_hat, -kInf};
  if (v1_linked <= v2_hat) out[1].revenue = menu_revenue(v1_linked, v2_hat, inst);

  // One common threshold for both demand levels.
  const double v_common = golden_max(
      [&](double v) {
        return v * (q1 * d1 * (1.0 - m1.cdf_clamped(v)) +
                    q2 * d2 * (1.0 - m2.cdf_clamped(v)));
      },
      0.0, v_bar, tol);
  out[2] = {v_common, v_common, menu_revenue(v_common, v_common, inst)};

  // Upper threshold drives everything through v1 = (d2/d1) v2; the smaller
  // demand's threshold may exceed v_bar, where its CDF saturates.
  const double v2_bundle = golden_max(
      [&](double v) {
        return v * d2 *
               (q2 * (1.0 - m2.cdf_clamped(v)) +
                q1 * (1.0 - m1.cdf_clamped(v * d2 / d1)));
      },
      0.0, v_bar, tol);
  out[3] = {v2_bundle * d2 / d1, v2_bundle,
            menu_revenue(v2_bundle * d2 / d1, v2_bundle, inst)};
  return out;
}

KTwoSolution solve_k2(const ProblemInstance& inst) {
  if (inst.k() != 2)
    throw std::invalid_argument("solve_k2: instance must have k=2");
  const std::array<KTwoCandidate, 4> cands = candidate_objectives(inst);
  int best = 0;
  for (int c = 1; c < 4; ++c)
    if (cands[static_cast<size_t>(c)].revenue >
        cands[static_cast<size_t>(best)].revenue)
      best = c;  // strict: ties keep the lower case id
  const KTwoCandidate& win = cands[static_cast<size_t>(best)];
  KTwoSolution sol{win.v1, win.v2, static_cast<KTwoCase>(best),
                   map_to_prices(win.v1, win.v2, inst), 0.0};
  sol.revenue = rev(sol.prices, inst);
  return sol;
}

const char* to_string(KTwoCase c) {
  switch (c) {
    case KTwoCase::kSeparateMonopoly:
      return "separate_monopoly";
    case KTwoCase::kLinkedPair:
      return "linked_pair";
    case KTwoCase::kEqualThresholds:
      return "equal_thresholds";
    case KTwoCase::kBundleOnly:
      return "bundle_only";
  }
  return "unknown";
}

}  // namespace multiunit
