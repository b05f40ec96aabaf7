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

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "multiunit/instance.hpp"
#include "multiunit/optimizer.hpp"
#include "multiunit/rng.hpp"

namespace multiunit {

// A posted-price seller facing one fresh buyer per round.  Strategies see
// only what a seller would: the menu they posted and which bundle sold.
// Buyer draws never reach the strategy.
class Strategy {
 public:
  virtual ~Strategy() = default;

  // Menu for the next round, k non-decreasing non-negative prices.
  virtual std::vector<double> next_prices(Rng& rng) = 0;

  // Outcome of the round just played: index of the bundle bought under the
  // last posted menu, 0 for no purchase.
  virtual void observe(int bundle) = 0;

  virtual std::string id() const = 0;
};

// Posts the same menu every round.
std::unique_ptr<Strategy> make_fixed_strategy(std::vector<double> prices);

// Epsilon-greedy over a lattice of menus.  Arms are the ordered menus with
// each price increment on an arms_per_axis grid of its feasible range
// [0, (d_i - d_{i-1}) v_bar]; exploration decays as t^{-1/3}.
std::unique_ptr<Strategy> make_eps_grid_strategy(const std::vector<int>& demands,
                                                 double v_bar,
                                                 int arms_per_axis = 8);

// Bandit gradient ascent: alternates +/- delta_t probes of an incumbent
// menu along a random direction, forms a two-point gradient estimate from
// the revenue difference, and takes a projected step.  Schedules
// eta_t ~ t^{-3/4}, delta_t ~ t^{-1/4}.  Non-positive eta0/delta0 select
// defaults scaled by the revenue range d_k * v_bar.
std::unique_ptr<Strategy> make_two_point_strategy(const std::vector<int>& demands,
                                                  double v_bar,
                                                  double eta0 = 0.0,
                                                  double delta0 = 0.0);

struct SimulationConfig {
  long long rounds = 10000;
  uint64_t seed = 1;
};

// Column-major record of a run.  prices holds rounds * k entries, row r at
// [r*k, (r+1)*k).  values/demand_draws are the buyer draws, recorded for
// analysis only; the strategy never saw them.
struct SimulationTrace {
  int k = 0;
  uint64_t seed = 0;
  std::string strategy_id;
  std::vector<double> prices;
  std::vector<double> values;
  std::vector<int> demand_draws;
  std::vector<int> bundles;
  std::vector<double> revenues;

  long long rounds() const { return static_cast<long long>(bundles.size()); }
};

// Runs the round loop: draw a buyer type, let the strategy post a menu,
// resolve the purchase with the static tie-break (larger bundle among
// utility maximizers), report the bundle back to the strategy.
SimulationTrace simulate(const ProblemInstance& inst, Strategy& strategy,
                         const SimulationConfig& cfg);

struct RegretSummary {
  double benchmark_revenue = 0.0;  // best fixed menu, per round
  double realized_revenue = 0.0;  // total over the trace
  double cumulative_regret = 0.0;
  double average_regret = 0.0;
};

// Regret against the best fixed menu in hindsight, computed by the static
// optimizer on the true instance.
RegretSummary regret(const SimulationTrace& trace, const ProblemInstance& inst,
                     const OptimizeConfig& cfg = {});

// CSV export: header "round,p_1,...,p_k,bundle,revenue".  Buyer draws are
// deliberately not exported.
void write_trace_csv(const SimulationTrace& trace, std::ostream& os);

}  // namespace multiunit
