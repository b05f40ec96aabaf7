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

#include "multiunit/ktwo.hpp"
#include "multiunit/optimizer.hpp"
#include "multiunit/revenue.hpp"
#include "testutil.hpp"

using namespace multiunit;

namespace {

ProblemInstance uniform_k2() {
  std::vector<Marginal> m;
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  return ProblemInstance({1, 2}, {0.5, 0.5}, std::move(m));
}

}  // namespace

TEST_CASE("monopoly threshold of a uniform marginal") {
  const Marginal m = Marginal::uniform(0.0, 1.0, 1.0);
  CHECK(monopoly_threshold(m, 1) == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("symmetric uniforms price as separate monopolies") {
  const KTwoSolution sol = solve_k2(uniform_k2());
  CHECK(sol.case_id == KTwoCase::kSeparateMonopoly);
  CHECK(sol.v1_star == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(sol.v2_star == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(sol.prices[1] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(sol.prices[2] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sol.revenue == doctest::Approx(0.375).epsilon(1e-9));
}

TEST_CASE("reported revenue equals the menu revenue of reported prices") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemInstance inst = testutil::random_dmr_instance(rng, 2);
    const KTwoSolution sol = solve_k2(inst);
    CHECK(sol.revenue == doctest::Approx(rev(sol.prices, inst)).epsilon(1e-10));
    CHECK(sol.prices[1] <= sol.prices[2] + 1e-12);
  }
}

TEST_CASE("candidate selection matches the general optimizer") {
  Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const ProblemInstance inst = testutil::random_dmr_instance(rng, 2);
    const KTwoSolution sol = solve_k2(inst);
    const OptimizeResult opt = maximize(inst);
    CHECK(sol.revenue == doctest::Approx(opt.rev_star).epsilon(5e-5));
  }
}

TEST_CASE("all four candidates are scored and feasibility gates apply") {
  const auto cands = candidate_objectives(uniform_k2());
  // Case 0 must be feasible and optimal for the symmetric instance.
  CHECK(cands[0].revenue == doctest::Approx(0.375).epsilon(1e-6));
  for (const KTwoCandidate& c : cands) {
    if (std::isfinite(c.revenue)) {
      CHECK(c.revenue <= 0.375 + 1e-9);
      CHECK(c.v1 >= 0.0);
      CHECK(c.v2 >= 0.0);
    }
  }
}

TEST_CASE("case names are stable identifiers") {
  CHECK(to_string(KTwoCase::kSeparateMonopoly) ==
        std::string("separate_monopoly"));
  CHECK(to_string(KTwoCase::kLinkedPair) == std::string("linked_pair"));
  CHECK(to_string(KTwoCase::kEqualThresholds) ==
        std::string("equal_thresholds"));
  CHECK(to_string(KTwoCase::kBundleOnly) == std::string("bundle_only"));
}

TEST_CASE("solve_k2 rejects instances with other sizes") {
  std::vector<Marginal> m;
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  const ProblemInstance k1({1}, {1.0}, std::move(m));
  CHECK_THROWS_AS(solve_k2(k1), std::invalid_argument);
}
