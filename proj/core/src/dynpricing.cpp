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

#include "multiunit/dynpricing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "multiunit/revenue.hpp"

namespace multiunit {
namespace {

std::vector<double> increment_caps(const std::vector<int>& demands,
                                   double v_bar) {
  if (demands.empty())
    throw std::invalid_argument("strategy: demands must be non-empty");
  if (!(v_bar > 0.0) || !std::isfinite(v_bar))
    throw std::invalid_argument("strategy: v_bar must be positive");
  std::vector<double> caps(demands.size());
  int prev = 0;
  for (size_t i = 0; i < demands.size(); ++i) {
    if (demands[i] <= prev)
      throw std::invalid_argument("strategy: demands must be increasing");
    caps[i] = (demands[i] - prev) * v_bar;
    prev = demands[i];
  }
  return caps;
}

std::vector<double> prices_from_increments(const std::vector<double>& c) {
  std::vector<double> p(c.size());
  double run = 0.0;
  for (size_t i = 0; i < c.size(); ++i) {
    run += c[i];
    p[i] = run;
  }
  return p;
}

class FixedStrategy final : public Strategy {
 public:
  explicit FixedStrategy(std::vector<double> prices)
      : prices_(std::move(prices)) {
    if (prices_.empty())
      throw std::invalid_argument("fixed strategy: empty menu");
    double prev = 0.0;
    for (double p : prices_) {
      if (!std::isfinite(p) || p < prev)
        throw std::invalid_argument(
            "fixed strategy: prices must be finite and non-decreasing");
      prev = p;
    }
  }

  std::vector<double> next_prices(Rng&) override { return prices_; }
  void observe(int) override {}
  std::string id() const override { return "fixed"; }

 private:
  std::vector<double> prices_;
};

class EpsGridStrategy final : public Strategy {
 public:
  EpsGridStrategy(const std::vector<int>& demands, double v_bar,
                  int arms_per_axis) {
    if (arms_per_axis < 2)
      throw std::invalid_argument("eps-grid strategy: need at least 2 arms per axis");
    const std::vector<double> caps = increment_caps(demands, v_bar);
    const size_t k = caps.size();
    // Cartesian lattice in increment space; every point is ordered.
    std::vector<int> idx(k, 0);
    while (true) {
      std::vector<double> c(k);
      for (size_t i = 0; i < k; ++i)
        c[i] = caps[i] * idx[i] / (arms_per_axis - 1);
      arms_.push_back(prices_from_increments(c));
      size_t pos = k;
      while (pos > 0 && idx[pos - 1] == arms_per_axis - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (size_t i = pos; i < k; ++i) idx[i] = 0;
    }
    counts_.assign(arms_.size(), 0);
    means_.assign(arms_.size(), 0.0);
  }

  std::vector<double> next_prices(Rng& rng) override {
    ++t_;
    const double eps =
        std::min(1.0, std::cbrt(static_cast<double>(arms_.size()) /
                                static_cast<double>(t_)));
    if (uniform01(rng) < eps) {
      last_arm_ = static_cast<size_t>(uniform01(rng) * arms_.size());
      if (last_arm_ >= arms_.size()) last_arm_ = arms_.size() - 1;
    } else {
      last_arm_ = 0;
      for (size_t a = 1; a < arms_.size(); ++a)
        if (means_[a] > means_[last_arm_]) last_arm_ = a;
    }
    return arms_[last_arm_];
  }

  void observe(int bundle) override {
    const double r =
        bundle > 0 ? arms_[last_arm_][static_cast<size_t>(bundle - 1)] : 0.0;
    ++counts_[last_arm_];
    means_[last_arm_] += (r - means_[last_arm_]) / counts_[last_arm_];
  }

  std::string id() const override { return "eps-grid"; }

 private:
  std::vector<std::vector<double>> arms_;
  std::vector<long long> counts_;
  std::vector<double> means_;
  size_t last_arm_ = 0;
  long long t_ = 0;
};

class TwoPointStrategy final : public Strategy {
 public:
  TwoPointStrategy(const std::vector<int>& demands, double v_bar, double eta0,
                   double delta0)
      : caps_(increment_caps(demands, v_bar)), upper_(0.0) {
    for (double c : caps_) upper_ += c;
    const double scale = upper_;  // d_k * v_bar
    eta0_ = eta0 > 0.0 ? eta0 : 0.01 * scale;
    delta0_ = delta0 > 0.0 ? delta0 : 0.1 * scale;
    incumbent_.resize(caps_.size());
    for (size_t i = 0; i < caps_.size(); ++i) incumbent_[i] = 0.5 * caps_[i];
  }

  std::vector<double> next_prices(Rng& rng) override {
    const size_t k = caps_.size();
    if (!pending_second_) {
      ++pair_;
      delta_ = delta0_ * std::pow(static_cast<double>(pair_), -0.25);
      // Random unit direction in increment space.
      direction_.assign(k, 0.0);
      double norm = 0.0;
      for (size_t i = 0; i < k; ++i) {
        const double u1 = std::max(uniform01(rng), 1e-300);
        const double u2 = uniform01(rng);
        direction_[i] = std::sqrt(-2.0 * std::log(u1)) *
                        std::cos(2.0 * std::numbers::pi * u2);
        norm += direction_[i] * direction_[i];
      }
      norm = std::sqrt(std::max(norm, 1e-12));
      for (double& d : direction_) d /= norm;
      return probe(+1.0);
    }
    return probe(-1.0);
  }

  void observe(int bundle) override {
    const double r =
        bundle > 0 ? last_menu_[static_cast<size_t>(bundle - 1)] : 0.0;
    if (!pending_second_) {
      reward_plus_ = r;
      pending_second_ = true;
      return;
    }
    pending_second_ = false;
    const size_t k = caps_.size();
    const double g = static_cast<double>(k) * (reward_plus_ - r) / (2.0 * delta_);
    const double eta = eta0_ * std::pow(static_cast<double>(pair_), -0.75);
    for (size_t i = 0; i < k; ++i) {
      incumbent_[i] =
          std::clamp(incumbent_[i] + eta * g * direction_[i], 0.0, caps_[i]);
    }
  }

  std::string id() const override { return "two-point"; }

 private:
  std::vector<double> probe(double sign) {
    const size_t k = caps_.size();
    std::vector<double> c(k);
    for (size_t i = 0; i < k; ++i)
      c[i] = std::clamp(incumbent_[i] + sign * delta_ * direction_[i], 0.0,
                        caps_[i]);
    last_menu_ = prices_from_increments(c);
    return last_menu_;
  }

  std::vector<double> caps_;
  double upper_;
  double eta0_ = 0.0;
  double delta0_ = 0.0;
  std::vector<double> incumbent_;
  std::vector<double> direction_;
  std::vector<double> last_menu_;
  double delta_ = 0.0;
  double reward_plus_ = 0.0;
  bool pending_second_ = false;
  long long pair_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_fixed_strategy(std::vector<double> prices) {
  return std::make_unique<FixedStrategy>(std::move(prices));
}

std::unique_ptr<Strategy> make_eps_grid_strategy(const std::vector<int>& demands,
                                                 double v_bar,
                                                 int arms_per_axis) {
  return std::make_unique<EpsGridStrategy>(demands, v_bar, arms_per_axis);
}

std::unique_ptr<Strategy> make_two_point_strategy(const std::vector<int>& demands,
                                                  double v_bar, double eta0,
                                                  double delta0) {
  return std::make_unique<TwoPointStrategy>(demands, v_bar, eta0, delta0);
}

SimulationTrace simulate(const ProblemInstance& inst, Strategy& strategy,
                         const SimulationConfig& cfg) {
  if (cfg.rounds < 1)
    throw std::invalid_argument("simulate: rounds must be >= 1");
  const int k = inst.k();
  SimulationTrace trace;
  trace.k = k;
  trace.seed = cfg.seed;
  trace.strategy_id = strategy.id();
  trace.prices.reserve(static_cast<size_t>(cfg.rounds) * k);
  trace.values.reserve(static_cast<size_t>(cfg.rounds));
  trace.demand_draws.reserve(static_cast<size_t>(cfg.rounds));
  trace.bundles.reserve(static_cast<size_t>(cfg.rounds));
  trace.revenues.reserve(static_cast<size_t>(cfg.rounds));

  Rng rng(cfg.seed);
  for (long long r = 0; r < cfg.rounds; ++r) {
    const int i = 1 + sample_index(rng, inst.weights());
    const double v = inst.marginal(i).sample(rng);
    const int d = inst.demand(i);

    std::vector<double> menu = strategy.next_prices(rng);
    if (static_cast<int>(menu.size()) != k)
      throw std::invalid_argument("simulate: strategy posted wrong menu size");
    PriceVector p(menu);

    const int bundle = best_bundle(v, d, p, inst);
    const double revenue = bundle > 0 ? p[bundle] : 0.0;
    strategy.observe(bundle);

    trace.prices.insert(trace.prices.end(), menu.begin(), menu.end());
    trace.values.push_back(v);
    trace.demand_draws.push_back(d);
    trace.bundles.push_back(bundle);
    trace.revenues.push_back(revenue);
  }
  return trace;
}

RegretSummary regret(const SimulationTrace& trace, const ProblemInstance& inst,
                     const OptimizeConfig& cfg) {
  if (trace.rounds() < 1)
    throw std::invalid_argument("regret: empty trace");
  RegretSummary out;
  out.benchmark_revenue = maximize(inst, cfg).rev_star;
  for (double r : trace.revenues) out.realized_revenue += r;
  out.cumulative_regret =
      out.benchmark_revenue * static_cast<double>(trace.rounds()) -
      out.realized_revenue;
  out.average_regret =
      out.cumulative_regret / static_cast<double>(trace.rounds());
  return out;
}

void write_trace_csv(const SimulationTrace& trace, std::ostream& os) {
  os << "round";
  for (int i = 1; i <= trace.k; ++i) os << ",p_" << i;
  os << ",bundle,revenue\n";
  char buf[64];
  const size_t k = static_cast<size_t>(trace.k);
  for (long long r = 0; r < trace.rounds(); ++r) {
    os << r;
    for (size_t i = 0; i < k; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g",
                    trace.prices[static_cast<size_t>(r) * k + i]);
      os << ',' << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g",
                  trace.revenues[static_cast<size_t>(r)]);
    os << ',' << trace.bundles[static_cast<size_t>(r)] << ',' << buf << '\n';
  }
}

}  // namespace multiunit
