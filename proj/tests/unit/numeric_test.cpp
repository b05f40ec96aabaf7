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

#include <doctest.h>

#include "multiunit/numeric.hpp"

using namespace multiunit;

TEST_CASE("integrate handles polynomials exactly within tolerance") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 2.0, 1e-10) ==
        doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-9));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrate rejects reversed bounds") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, 1e-10),
                  std::invalid_argument);
}

TEST_CASE("golden_max locates a smooth interior maximum") {
  const double x = golden_max([](double t) { return -(t - 0.3) * (t - 0.3); },
                              0.0, 1.0, 1e-12);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("golden_max returns a maximizer on a plateau") {
  // f rises to 0.5 then stays flat; any point of the plateau is optimal.
  auto f = [](double t) { return std::min(t, 0.5); };
  const double x = golden_max(f, 0.0, 1.0, 1e-12);
  CHECK(f(x) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("golden_max finds the best of several scan-separated bumps") {
  auto f = [](double t) {
    return std::exp(-200.0 * (t - 0.17) * (t - 0.17)) +
           2.0 * std::exp(-200.0 * (t - 0.83) * (t - 0.83));
  };
  const double x = golden_max(f, 0.0, 1.0, 1e-12);
  CHECK(x == doctest::Approx(0.83).epsilon(1e-6));
}

TEST_CASE("inverse_normal_cdf inverts the normal CDF") {
  auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  for (double u : {1e-6, 0.01, 0.2, 0.5, 0.8, 0.99, 1.0 - 1e-6}) {
    CHECK(normal_cdf(inverse_normal_cdf(u)) ==
          doctest::Approx(u).epsilon(1e-12));
  }
}
