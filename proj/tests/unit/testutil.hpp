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

#include <algorithm>
#include <cmath>
#include <vector>

#include "multiunit/instance.hpp"
#include "multiunit/marginal.hpp"
#include "multiunit/revenue.hpp"
#include "multiunit/rng.hpp"

namespace multiunit::testutil {

// Random marginal guaranteed concave-revenue by construction: each branch
// stays inside its kind's exact concavity region.
inline Marginal random_dmr_marginal(Rng& rng, double v_bar) {
  switch (static_cast<int>(uniform01(rng) * 5.0)) {
    case 0:
      return Marginal::uniform(uniform_in(rng, 0.0, 0.3 * v_bar),
                               uniform_in(rng, v_bar, 2.0 * v_bar), v_bar);
    case 1:
      return Marginal::constant_elasticity(
          uniform_in(rng, 0.05, 0.5) * v_bar, uniform_in(rng, -3.0, -1.0),
          v_bar);
    case 2:
      return Marginal::exponential_truncated(uniform_in(rng, 0.2, 2.0) / v_bar,
                                             v_bar);
    case 3: {
      const double mean = uniform_in(rng, 0.3 * v_bar, 1.2 * v_bar);
      const double need = std::max(v_bar * (v_bar - mean), 0.0);
      const double stddev =
          std::sqrt(need / 2.0) + uniform_in(rng, 0.05, 0.5) * v_bar;
      return Marginal::truncated_normal(mean, stddev, v_bar);
    }
    default: {
      std::vector<Marginal> comps;
      comps.push_back(
          Marginal::uniform(0.0, uniform_in(rng, v_bar, 1.5 * v_bar), v_bar));
      comps.push_back(Marginal::exponential_truncated(
          uniform_in(rng, 0.2, 1.8) / v_bar, v_bar));
      return Marginal::mixture(std::move(comps), {0.5, 0.5});
    }
  }
}

inline ProblemInstance random_dmr_instance(Rng& rng, int k) {
  std::vector<int> demands(static_cast<size_t>(k));
  int d = 1 + static_cast<int>(uniform01(rng) * 2.0);
  for (int i = 0; i < k; ++i) {
    demands[static_cast<size_t>(i)] = d;
    d += 1 + static_cast<int>(uniform01(rng) * 3.0);
  }
  std::vector<double> weights(static_cast<size_t>(k));
  double sum = 0.0;
  for (double& w : weights) {
    w = uniform_in(rng, 0.2, 1.0);
    sum += w;
  }
  double run = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    weights[static_cast<size_t>(i)] /= sum;
    run += weights[static_cast<size_t>(i)];
  }
  weights[static_cast<size_t>(k - 1)] = 1.0 - run;  // exact unit total
  const double v_bar = uniform_in(rng, 0.5, 2.0);
  std::vector<Marginal> marginals;
  marginals.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    marginals.push_back(random_dmr_marginal(rng, v_bar));
  return ProblemInstance(std::move(demands), std::move(weights),
                         std::move(marginals));
}

// Uniform draw from the concavity polytope: each price increment in
// [0, (d_i - d_{i-1}) v_bar].
inline PriceVector random_prices(Rng& rng, const ProblemInstance& inst) {
  std::vector<double> p(static_cast<size_t>(inst.k()));
  double run = 0.0;
  for (int i = 1; i <= inst.k(); ++i) {
    const double cap = (inst.demand(i) - inst.demand(i - 1)) * inst.v_bar();
    run += uniform_in(rng, 0.0, cap);
    p[static_cast<size_t>(i - 1)] = run;
  }
  return PriceVector(std::move(p));
}

}  // namespace multiunit::testutil
