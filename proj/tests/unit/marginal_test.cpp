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
#include "multiunit/rng.hpp"

using namespace multiunit;

TEST_CASE("uniform basics") {
  const Marginal m = Marginal::uniform(0.0, 1.0, 1.0);
  CHECK(m.cdf(0.3) == doctest::Approx(0.3));
  CHECK(m.pdf(0.3) == doctest::Approx(1.0));
  CHECK(m.quantile(0.3) == doctest::Approx(0.3));
  CHECK(m.cdf(1.0) == 1.0);
  CHECK(m.cdf(0.0) == 0.0);
  CHECK(m.revenue_curve(0.5) == doctest::Approx(0.25));
  CHECK(m.virtual_value(0.5) == doctest::Approx(0.0));
}

TEST_CASE("uniform truncated above renormalizes") {
  // Support reaches 2 but values are capped at 1, so the conditional CDF
  // doubles the slope.
  const Marginal m = Marginal::uniform(0.0, 2.0, 1.0);
  CHECK(m.cdf(0.5) == doctest::Approx(0.5));
  CHECK(m.quantile(0.25) == doctest::Approx(0.25));
  CHECK(m.cdf(1.0) == 1.0);
}

TEST_CASE("cdf outside the domain throws") {
  const Marginal m = Marginal::uniform(0.0, 1.0, 1.0);
  CHECK_THROWS_AS(m.cdf(-0.1), std::domain_error);
  CHECK_THROWS_AS(m.cdf(1.1), std::domain_error);
  CHECK(m.cdf_clamped(1.1) == 1.0);
  CHECK(m.cdf_clamped(-0.1) == 0.0);
}

TEST_CASE("constant elasticity cdf and quantile invert") {
  const Marginal m = Marginal::constant_elasticity(0.1, -2.0, 1.0);
  CHECK(m.cdf(0.1) == doctest::Approx(0.0));
  CHECK(m.cdf(1.0) == 1.0);
  for (double u : {0.05, 0.3, 0.7, 0.95})
    CHECK(m.cdf(m.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
}

TEST_CASE("exponential cdf and quantile invert") {
  const Marginal m = Marginal::exponential_truncated(1.5, 1.0);
  CHECK(m.cdf(0.0) == 0.0);
  CHECK(m.cdf(1.0) == 1.0);
  for (double u : {0.05, 0.3, 0.7, 0.95})
    CHECK(m.cdf(m.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
}

TEST_CASE("truncated normal cdf and quantile invert") {
  const Marginal m = Marginal::truncated_normal(0.4, 0.6, 1.0);
  CHECK(m.cdf(0.0) == 0.0);
  CHECK(m.cdf(1.0) == 1.0);
  for (double u : {0.05, 0.3, 0.7, 0.95})
    CHECK(m.cdf(m.quantile(u)) == doctest::Approx(u).epsilon(1e-9));
}

TEST_CASE("piecewise linear cdf interpolates its knots") {
  const Marginal m =
      Marginal::piecewise_linear_cdf({0.0, 0.8, 1.0}, {0.0, 0.2, 1.0});
  CHECK(m.v_bar() == 1.0);
  CHECK(m.cdf(0.4) == doctest::Approx(0.1));
  CHECK(m.cdf(0.9) == doctest::Approx(0.6));
  CHECK(m.quantile(0.1) == doctest::Approx(0.4));
  CHECK(m.pdf(0.5) == doctest::Approx(0.25));
  CHECK(m.pdf(0.9) == doctest::Approx(4.0));
}

TEST_CASE("mixture averages components and inverts by bisection") {
  std::vector<Marginal> comps;
  comps.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  comps.push_back(Marginal::exponential_truncated(2.0, 1.0));
  const Marginal m = Marginal::mixture(std::move(comps), {0.25, 0.75});
  const Marginal u = Marginal::uniform(0.0, 1.0, 1.0);
  const Marginal e = Marginal::exponential_truncated(2.0, 1.0);
  CHECK(m.cdf(0.4) ==
        doctest::Approx(0.25 * u.cdf(0.4) + 0.75 * e.cdf(0.4)).epsilon(1e-14));
  for (double q : {0.1, 0.5, 0.9})
    CHECK(m.cdf(m.quantile(q)) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("samples stay inside the support") {
  Rng rng(42);
  const Marginal m = Marginal::truncated_normal(-0.2, 0.8, 1.5);
  for (int i = 0; i < 1000; ++i) {
    const double v = m.sample(rng);
    CHECK(v >= 0.0);
    CHECK(v <= 1.5);
  }
}

TEST_CASE("concave revenue classification by kind") {
  // Uniform reaching the cap: concave, and regular.
  CHECK(Marginal::uniform(0.0, 1.0, 1.0).is_dmr().dmr);
  CHECK(Marginal::uniform(0.0, 1.0, 1.0).is_regular());
  // Heavy-tail constant elasticity: concave revenue but a non-monotone
  // virtual value once the cap is far above the scale.
  const Marginal ce = Marginal::constant_elasticity(0.1, -2.0, 1.0);
  CHECK(ce.is_dmr().dmr);
  CHECK_FALSE(ce.is_regular());
  // Mild constant elasticity: the reverse.
  const Marginal ce2 = Marginal::constant_elasticity(1.0, -0.5, 2.0);
  CHECK_FALSE(ce2.is_dmr().dmr);
  CHECK(ce2.is_regular());
  // Exponential: concave iff rate * v_bar <= 2; always regular.
  CHECK(Marginal::exponential_truncated(1.0, 1.0).is_dmr().dmr);
  CHECK_FALSE(Marginal::exponential_truncated(1.0, 4.0).is_dmr().dmr);
  CHECK(Marginal::exponential_truncated(1.0, 4.0).is_regular());
  // Truncated normal: concave iff v_bar (v_bar - mean) <= 2 stddev^2.
  CHECK(Marginal::truncated_normal(0.5, 1.0, 1.0).is_dmr().dmr);
  CHECK_FALSE(Marginal::truncated_normal(-1.0, 0.3, 1.0).is_dmr().dmr);
  CHECK(Marginal::truncated_normal(-1.0, 0.3, 1.0).is_regular());
}

TEST_CASE("short uniform support breaks concavity at the kink") {
  const Marginal m = Marginal::uniform(0.0, 0.6, 1.0);
  const DmrResult r = m.is_dmr();
  REQUIRE_FALSE(r.dmr);
  REQUIRE(r.witness.has_value());
  // The witness is a genuine midpoint violation of concavity.
  const double lhs = m.revenue_curve(r.witness->v_mid);
  const double rhs = 0.5 * (m.revenue_curve(r.witness->v_left) +
                            m.revenue_curve(r.witness->v_right));
  CHECK(rhs - lhs == doctest::Approx(r.witness->violation).epsilon(1e-12));
  CHECK(r.witness->violation > 0.0);
}

TEST_CASE("mixtures of concave-revenue marginals stay concave") {
  std::vector<Marginal> comps;
  comps.push_back(Marginal::uniform(0.0, 1.2, 1.0));
  comps.push_back(Marginal::exponential_truncated(1.8, 1.0));
  comps.push_back(Marginal::constant_elasticity(0.2, -1.5, 1.0));
  const Marginal m =
      Marginal::mixture(std::move(comps), {0.3, 0.3, 0.4});
  CHECK(m.is_dmr().dmr);
}

TEST_CASE("rising-density piecewise cdf is concave, falling is not") {
  CHECK(Marginal::piecewise_linear_cdf({0.0, 0.8, 1.0}, {0.0, 0.2, 1.0})
            .is_dmr()
            .dmr);
  CHECK_FALSE(Marginal::piecewise_linear_cdf({0.0, 0.2, 1.0}, {0.0, 0.8, 1.0})
                  .is_dmr()
                  .dmr);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Marginal::uniform(1.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Marginal::uniform(0.0, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(Marginal::exponential_truncated(-1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Marginal::constant_elasticity(0.5, 0.5, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Marginal::piecewise_linear_cdf({0.0, 1.0}, {0.0, 0.5}),
      std::invalid_argument);
  std::vector<Marginal> comps;
  comps.push_back(Marginal::uniform(0.0, 1.0, 1.0));
  comps.push_back(Marginal::uniform(0.0, 2.0, 2.0));  // mismatched v_bar
  CHECK_THROWS_AS(Marginal::mixture(std::move(comps), {0.5, 0.5}),
                  std::invalid_argument);
}
