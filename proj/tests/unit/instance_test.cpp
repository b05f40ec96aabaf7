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

#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "multiunit/instance.hpp"
#include "multiunit/marginal.hpp"

using namespace multiunit;

namespace {

std::vector<Marginal> two_uniforms() {
  std::vector<Marginal> m;
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  return m;
}

}  // namespace

TEST_CASE("instance exposes 1-based accessors with a demand-0 sentinel") {
  const ProblemInstance inst({1, 2}, {0.4, 0.6}, two_uniforms());
  CHECK(inst.k() == 2);
  CHECK(inst.v_bar() == 1.0);
  CHECK(inst.demand(0) == 0);
  CHECK(inst.demand(1) == 1);
  CHECK(inst.demand(2) == 2);
  CHECK(inst.weight(1) == 0.4);
  CHECK(inst.weight(2) == 0.6);
  CHECK(inst.all_dmr());
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(ProblemInstance({2, 1}, {0.5, 0.5}, two_uniforms()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({1, 1}, {0.5, 0.5}, two_uniforms()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({0, 1}, {0.5, 0.5}, two_uniforms()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({1, 2}, {0.5, 0.4}, two_uniforms()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({1, 2}, {0.5}, two_uniforms()),
                  std::invalid_argument);
  std::vector<Marginal> mismatched;
  mismatched.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  mismatched.push_back(Marginal::uniform(0.0, 2.0, 2.0));
  CHECK_THROWS_AS(ProblemInstance({1, 2}, {0.5, 0.5}, std::move(mismatched)),
                  std::invalid_argument);
}

TEST_CASE("all_dmr is false when any marginal fails") {
  std::vector<Marginal> m;
  m.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  m.push_back(Marginal::uniform(0.0, 0.6, 1.0));  // convex kink at 0.6
  const ProblemInstance inst({1, 3}, {0.5, 0.5}, std::move(m));
  CHECK_FALSE(inst.all_dmr());
}
