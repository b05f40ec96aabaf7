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

#include "multiunit/instance.hpp"

namespace multiunit {

struct DiscreteType {
  double v = 0.0;
  int d = 1;
};

// Finite-type market: type t occurs with probability probs[t].
class DiscreteInstance {
 public:
  // Values must be finite and >= 0, demands >= 1; probs non-negative and
  // summing to 1 within 1e-12.  Throws std::invalid_argument.
  DiscreteInstance(std::vector<DiscreteType> types, std::vector<double> probs);

  int n() const { return static_cast<int>(types_.size()); }
  const std::vector<DiscreteType>& types() const { return types_; }
  const std::vector<double>& probs() const { return probs_; }
  // Distinct demands, ascending.
  std::vector<int> distinct_demands() const;

 private:
  std::vector<DiscreteType> types_;
  std::vector<double> probs_;
};

// Direct-revelation mechanism: type t receives its full demand with
// probability w[t] (nothing otherwise) and pays p[t] in expectation.
struct Mechanism {
  std::vector<double> w;
  std::vector<double> p;
};

struct LpSolution {
  Mechanism mechanism;
  double revenue = 0.0;
};

// Optimal randomized mechanism by linear programming: maximize expected
// payment subject to every pairwise incentive constraint
//   v_t min(d_t, d_s) w[s] - p[s] <= v_t d_t w[t] - p[t]
// and participation p[t] <= v_t d_t w[t], with 0 <= w <= 1.  Constraints
// are generated outer-style (violated ones added until none remain) and
// re-verified at 1e-8 after the final solve.  Throws std::invalid_argument
// if n() exceeds type_cap, NumericalError on solver failure.
LpSolution lp_optimal(const DiscreteInstance& inst, int type_cap = 200);

struct DeterministicSolution {
  // Menu: bundle demands[j] at prices[j]; demands ascending.
  std::vector<int> demands;
  std::vector<double> prices;
  double revenue = 0.0;
};

// Expected revenue of a posted menu under seller-favorable tie-breaking:
// each type buys a utility-maximizing bundle (or nothing at utility 0),
// taking the highest-priced maximizer.  That convention realizes the
// supremum of nearby strict-preference menus.
double deterministic_menu_revenue(const DiscreteInstance& inst,
                                  const std::vector<int>& demands,
                                  const std::vector<double>& prices);

// Optimal deterministic menu by exhaustive search over a finite candidate
// set.  Expected revenue is piecewise linear in any single price with
// breakpoints where some type becomes indifferent, so an optimal menu
// exists in which every sold bundle's price is linked by a chain of buyer
// indifferences to a participation-binding root (otherwise the prices of a
// chain-closed set could all rise).  The search enumerates, per bundle, a
// parent: unsold, a root type (price = v min(d, bundle)), or an
// (other bundle, type) indifference link; acyclic combinations resolve to
// candidate menus.  Cost grows as ((m-1+1) n + 1)^m for m distinct demands
// and n types; throws std::invalid_argument when m > 4.
DeterministicSolution deterministic_optimal(const DiscreteInstance& inst);

// lp_optimal revenue minus deterministic_optimal revenue; >= -1e-9 always,
// strictly positive when randomization helps.
double determinism_gap(const DiscreteInstance& inst);

struct ExpostPayment {
  double on_allocation = 0.0;
  double on_no_allocation = 0.0;
};

// Converts expected payments into realized payments charged only on
// allocation: p[t]/w[t] when the lottery delivers, 0 otherwise.  Expected
// payment is preserved exactly; when the mechanism is individually
// rational, so is every realized outcome.  Throws std::invalid_argument if
// some p[t] > 0 with w[t] == 0.
std::vector<ExpostPayment> expost_payments(const Mechanism& mech);

// Deterministic-allocation view: type t receives units[t] <= d_t units for
// payments[t].  Replacing a short allocation by the full demand with
// probability units[t]/d_t preserves each type's truthful utility and the
// expected revenue exactly, and only shrinks misreport utilities.
Mechanism support_transform(const std::vector<int>& units,
                            const std::vector<double>& payments,
                            const DiscreteInstance& inst);

// Midpoint discretization: per demand level, points_per_demand values at
// quantiles (m - 1/2)/points_per_demand, each carrying weight
// q_i/points_per_demand.
DiscreteInstance discretize(const ProblemInstance& inst, int points_per_demand);

}  // namespace multiunit
