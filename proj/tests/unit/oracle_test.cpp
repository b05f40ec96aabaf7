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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "multiunit/marginal.hpp"
#include "multiunit/oracle.hpp"

using namespace multiunit;

namespace {

// Three equally likely types: two low-value bulk buyers and one high-value
// single-unit buyer.  Randomization strictly beats every deterministic menu.
DiscreteInstance gap_example() {
  const double third = 1.0 / 3.0;
  return DiscreteInstance({{1.0, 3}, {1.0, 2}, {6.0, 1}},
                          {third, third, 1.0 - 2.0 * third});
}

}  // namespace

TEST_CASE("discrete instance validation") {
  CHECK_THROWS_AS(DiscreteInstance({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteInstance({{1.0, 1}}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteInstance({{-1.0, 1}}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteInstance({{1.0, 0}}, {1.0}), std::invalid_argument);
  const DiscreteInstance ok({{2.0, 2}, {1.0, 2}, {3.0, 1}},
                            {0.25, 0.25, 0.5});
  CHECK(ok.n() == 3);
  CHECK(ok.distinct_demands() == std::vector<int>{1, 2});
}

TEST_CASE("randomization strictly beats deterministic menus on the gap example") {
  const DiscreteInstance inst = gap_example();
  const LpSolution lp = lp_optimal(inst);
  CHECK(lp.revenue == doctest::Approx(2.5).epsilon(1e-9));
  // The known optimal lottery: full allocations at prices 3 for the bulk
  // demands, and a 3/4 lottery at price 1.5 for the middle type.
  CHECK(lp.mechanism.w[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(lp.mechanism.w[1] == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(lp.mechanism.w[2] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(lp.mechanism.p[0] == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(lp.mechanism.p[1] == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(lp.mechanism.p[2] == doctest::Approx(3.0).epsilon(1e-8));

  const DeterministicSolution det = deterministic_optimal(inst);
  CHECK(det.revenue == doctest::Approx(7.0 / 3.0).epsilon(1e-9));
  CHECK(determinism_gap(inst) == doctest::Approx(1.0 / 6.0).epsilon(1e-7));
}

TEST_CASE("single type gets fully extracted with zero gap") {
  const DiscreteInstance inst({{2.0, 3}}, {1.0});
  const LpSolution lp = lp_optimal(inst);
  CHECK(lp.revenue == doctest::Approx(6.0).epsilon(1e-9));
  const DeterministicSolution det = deterministic_optimal(inst);
  CHECK(det.revenue == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(determinism_gap(inst) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("lp solution satisfies feasibility and incentive constraints") {
  const DiscreteInstance inst({{2.0, 2}, {1.5, 3}, {0.8, 1}, {3.0, 2}},
                              {0.25, 0.25, 0.25, 0.25});
  const LpSolution lp = lp_optimal(inst);
  const int n = inst.n();
  for (int t = 0; t < n; ++t) {
    const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
    const double w = lp.mechanism.w[static_cast<size_t>(t)];
    const double p = lp.mechanism.p[static_cast<size_t>(t)];
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
    CHECK(p <= ty.v * ty.d * w + 1e-8);
    for (int s = 0; s < n; ++s) {
      if (s == t) continue;
      const DiscreteType& ts = inst.types()[static_cast<size_t>(s)];
      const double dev = ty.v * std::min(ty.d, ts.d) *
                             lp.mechanism.w[static_cast<size_t>(s)] -
                         lp.mechanism.p[static_cast<size_t>(s)];
      CHECK(dev <= ty.v * ty.d * w - p + 1e-8);
    }
  }
}

TEST_CASE("menu evaluation uses the seller-favorable tie-break") {
  const DiscreteInstance inst = gap_example();
  // Everything priced at 3: the high type is indifferent across bundles
  // and the surplus-zero bulk type buys at zero utility.
  CHECK(deterministic_menu_revenue(inst, {1, 2, 3}, {3.0, 3.0, 3.0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // The known best menu: 2 units for 2, 3 units for 3.
  CHECK(deterministic_menu_revenue(inst, {2, 3}, {2.0, 3.0}) ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("deterministic enumeration rejects too many distinct demands") {
  std::vector<DiscreteType> types;
  std::vector<double> probs;
  for (int d = 1; d <= 5; ++d) {
    types.push_back({1.0, d});
    probs.push_back(0.2);
  }
  CHECK_THROWS_AS(deterministic_optimal(DiscreteInstance(types, probs)),
                  std::invalid_argument);
}

TEST_CASE("per-outcome payments spread price over the allocation event") {
  Mechanism mech;
  mech.w = {1.0, 0.75, 1.0};
  mech.p = {3.0, 1.5, 3.0};
  const std::vector<ExpostPayment> pay = expost_payments(mech);
  CHECK(pay[0].on_allocation == 3.0);
  CHECK(pay[1].on_allocation == 2.0);
  CHECK(pay[1].on_no_allocation == 0.0);
  // Expectation is preserved exactly.
  for (size_t t = 0; t < mech.w.size(); ++t)
    CHECK(mech.w[t] * pay[t].on_allocation == mech.p[t]);
  Mechanism bad;
  bad.w = {0.0};
  bad.p = {1.0};
  CHECK_THROWS_AS(expost_payments(bad), std::invalid_argument);
}

TEST_CASE("unit-fraction transform preserves truthful utility bitwise") {
  // Power-of-two demands make units/d exact, so utilities and revenue
  // survive the transform with equality, not just within tolerance.
  const DiscreteInstance inst({{1.3, 4}, {0.7, 2}, {2.9, 8}},
                              {0.25, 0.25, 0.5});
  const std::vector<int> units = {3, 1, 5};
  const std::vector<double> payments = {1.1, 0.3, 2.0};
  const Mechanism mech = support_transform(units, payments, inst);
  for (size_t t = 0; t < 3; ++t) {
    const DiscreteType& ty = inst.types()[t];
    const double before = ty.v * units[t] - payments[t];
    const double after = ty.v * (ty.d * mech.w[t]) - mech.p[t];
    CHECK(before == after);
  }
}

TEST_CASE("transform validation") {
  const DiscreteInstance inst({{1.0, 2}}, {1.0});
  CHECK_THROWS_AS(support_transform({3}, {0.5}, inst), std::invalid_argument);
  CHECK_THROWS_AS(support_transform({-1}, {0.5}, inst), std::invalid_argument);
  CHECK_THROWS_AS(support_transform({1, 1}, {0.5}, inst),
                  std::invalid_argument);
}

TEST_CASE("discretize uses midpoint quantiles per demand") {
  std::vector<Marginal> m;
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  const ProblemInstance inst({1, 2}, {0.4, 0.6}, std::move(m));
  const DiscreteInstance disc = discretize(inst, 2);
  REQUIRE(disc.n() == 4);
  CHECK(disc.types()[0].v == doctest::Approx(0.25));
  CHECK(disc.types()[1].v == doctest::Approx(0.75));
  CHECK(disc.types()[0].d == 1);
  CHECK(disc.types()[2].d == 2);
  CHECK(disc.probs()[0] == doctest::Approx(0.2));
  CHECK(disc.probs()[2] == doctest::Approx(0.3));
}
