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
#include "multiunit/ktwo.hpp"
#include "multiunit/marginal.hpp"
#include "multiunit/optimizer.hpp"

namespace {

using namespace multiunit;

ProblemInstance make_k2() {
  std::vector<Marginal> marginals;
  marginals.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  marginals.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  return ProblemInstance({1, 2}, {0.5, 0.5}, std::move(marginals));
}

void BM_Maximize(benchmark::State& state) {
  const ProblemInstance inst = make_k2();
  for (auto _ : state) benchmark::DoNotOptimize(maximize(inst));
}
BENCHMARK(BM_Maximize);

void BM_GridSearch(benchmark::State& state) {
  const ProblemInstance inst = make_k2();
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_search(inst, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GridSearch)->Arg(20)->Arg(40);

void BM_SolveK2(benchmark::State& state) {
  const ProblemInstance inst = make_k2();
  for (auto _ : state) benchmark::DoNotOptimize(solve_k2(inst));
}
BENCHMARK(BM_SolveK2);

}  // namespace

BENCHMARK_MAIN();
