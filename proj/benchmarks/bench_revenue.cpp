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
#include "multiunit/revenue.hpp"

namespace {

using namespace multiunit;

ProblemInstance make_k3() {
  std::vector<Marginal> marginals;
  marginals.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  marginals.push_back(Marginal::exponential_truncated(1.5, 1.0));
  marginals.push_back(Marginal::truncated_normal(0.4, 0.6, 1.0));
  return ProblemInstance({1, 2, 4}, {0.3, 0.4, 0.3}, std::move(marginals));
}

void BM_RevClosedForm(benchmark::State& state) {
  const ProblemInstance inst = make_k3();
  const PriceVector p({0.4, 0.9, 1.6});
  for (auto _ : state) benchmark::DoNotOptimize(rev(p, inst));
}
BENCHMARK(BM_RevClosedForm);

void BM_Supergradient(benchmark::State& state) {
  const ProblemInstance inst = make_k3();
  const PriceVector p({0.4, 0.9, 1.6});
  for (auto _ : state) benchmark::DoNotOptimize(supergradient(p, inst));
}
BENCHMARK(BM_Supergradient);

void BM_RevByIntegration(benchmark::State& state) {
  const ProblemInstance inst = make_k3();
  const PriceVector p({0.4, 0.9, 1.6});
  for (auto _ : state)
    benchmark::DoNotOptimize(rev_by_integration(p, inst, 1e-8));
}
BENCHMARK(BM_RevByIntegration);

}  // namespace

BENCHMARK_MAIN();
