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

#include <benchmark/benchmark.h>

#include "multiunit/instance.hpp"
#include "multiunit/marginal.hpp"
#include "multiunit/oracle.hpp"

namespace {

using namespace multiunit;

DiscreteInstance make_discretized(int points) {
  std::vector<Marginal> marginals;
  marginals.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  marginals.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  const ProblemInstance inst({1, 2}, {0.5, 0.5}, std::move(marginals));
  return discretize(inst, points);
}

void BM_LpOptimal(benchmark::State& state) {
  const DiscreteInstance inst = make_discretized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lp_optimal(inst));
}
BENCHMARK(BM_LpOptimal)->Arg(10)->Arg(25);

void BM_DeterministicOptimal(benchmark::State& state) {
  const DiscreteInstance inst = make_discretized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deterministic_optimal(inst));
}
BENCHMARK(BM_DeterministicOptimal)->Arg(10)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
