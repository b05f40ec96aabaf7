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

#include "multiunit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "multiunit/errors.hpp"
#include "multiunit/simplex.hpp"

namespace multiunit {
namespace {

// One incentive row: type t misreporting as s must not gain.
struct EicPair {
  int t = 0;
  int s = 0;
};

double eic_violation(const DiscreteInstance& inst, const Mechanism& mech,
                     int t, int s) {
  const DiscreteType& tt = inst.types()[static_cast<size_t>(t)];
  const DiscreteType& ts = inst.types()[static_cast<size_t>(s)];
  const double deviate =
      tt.v * std::min(tt.d, ts.d) * mech.w[static_cast<size_t>(s)] -
      mech.p[static_cast<size_t>(s)];
  const double truthful = tt.v * tt.d * mech.w[static_cast<size_t>(t)] -
                          mech.p[static_cast<size_t>(t)];
  return deviate - truthful;
}

std::vector<double> eic_row(const DiscreteInstance& inst, int n, int t,
                            int s) {
  // Variables: per type u, w at 2u and the truthful rent
  // r = v d w - p >= 0 at 2u+1.  Substituting p out of
  // "deviate minus truthful <= 0" cancels the w_t term and leaves
  //   (v_t min(d_t, d_s) - v_s d_s) w_s + r_s - r_t <= 0.
  std::vector<double> row(static_cast<size_t>(2 * n), 0.0);
  const DiscreteType& tt = inst.types()[static_cast<size_t>(t)];
  const DiscreteType& ts = inst.types()[static_cast<size_t>(s)];
  row[static_cast<size_t>(2 * s)] = tt.v * std::min(tt.d, ts.d) - ts.v * ts.d;
  row[static_cast<size_t>(2 * s + 1)] += 1.0;
  row[static_cast<size_t>(2 * t + 1)] -= 1.0;
  return row;
}

}  // namespace

DiscreteInstance::DiscreteInstance(std::vector<DiscreteType> types,
                                   std::vector<double> probs)
    : types_(std::move(types)), probs_(std::move(probs)) {
  if (types_.empty())
    throw std::invalid_argument("discrete instance: need at least one type");
  if (probs_.size() != types_.size())
    throw std::invalid_argument(
        "discrete instance: probs must match types in length");
  for (const DiscreteType& t : types_) {
    if (!std::isfinite(t.v) || t.v < 0.0)
      throw std::invalid_argument(
          "discrete instance: values must be finite and >= 0");
    if (t.d < 1)
      throw std::invalid_argument("discrete instance: demands must be >= 1");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument(
          "discrete instance: probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("discrete instance: probabilities must sum to 1");
}

std::vector<int> DiscreteInstance::distinct_demands() const {
  std::set<int> s;
  for (const DiscreteType& t : types_) s.insert(t.d);
  return std::vector<int>(s.begin(), s.end());
}

LpSolution lp_optimal(const DiscreteInstance& inst, int type_cap) {
  const int n = inst.n();
  if (n > type_cap)
    throw std::invalid_argument("lp_optimal: type count exceeds cap");

  // Variables per type: the allocation probability w and the truthful rent
  // r = v d w - p.  Revenue q.p becomes q.(v d w - r), r >= 0 is exactly
  // participation, and the zero mechanism is the feasible starting basis.
  // The only base rows are the caps w <= 1.
  LpProblem lp;
  lp.c.assign(static_cast<size_t>(2 * n), 0.0);
  for (int t = 0; t < n; ++t) {
    const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
    const double q = inst.probs()[static_cast<size_t>(t)];
    lp.c[static_cast<size_t>(2 * t)] = q * ty.v * ty.d;
    lp.c[static_cast<size_t>(2 * t + 1)] = -q;
  }
  for (int t = 0; t < n; ++t) {
    std::vector<double> cap(static_cast<size_t>(2 * n), 0.0);
    cap[static_cast<size_t>(2 * t)] = 1.0;
    lp.a.push_back(std::move(cap));
    lp.b.push_back(1.0);
  }

  // Outer generation over the n(n-1) incentive constraints: solve the
  // relaxation, add the most violated rows, repeat.  The final iterate is
  // feasible for the full program, hence optimal for it.  To keep the dense
  // tableau small, rows slack at the current iterate are shed between
  // rounds; should that ever fail to close, shedding stops after
  // kKeepAllAfter rounds, the working set can only grow from there, and
  // generation terminates on the accumulated system.
  constexpr double kGenTol = 1e-9;
  constexpr double kShedTol = 1e-7;
  constexpr int kMaxRounds = 400;
  constexpr int kKeepAllAfter = 300;
  const size_t batch = static_cast<size_t>(std::max(100, 2 * n));
  const size_t base_rows = lp.a.size();
  std::vector<EicPair> working;
  LpResult sol;
  Mechanism mech;
  for (int round = 0;; ++round) {
    if (round >= kMaxRounds)
      throw NumericalError("lp_optimal: constraint generation did not close");
    sol = solve_lp(lp);
    if (sol.status == LpStatus::kUnbounded)
      throw NumericalError("lp_optimal: relaxation unbounded");
    if (sol.status == LpStatus::kIterationLimit)
      throw NumericalError("lp_optimal: simplex iteration limit");
    mech.w.assign(static_cast<size_t>(n), 0.0);
    mech.p.assign(static_cast<size_t>(n), 0.0);
    for (int t = 0; t < n; ++t) {
      const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
      const double w = sol.x[static_cast<size_t>(2 * t)];
      mech.w[static_cast<size_t>(t)] = w;
      mech.p[static_cast<size_t>(t)] =
          ty.v * ty.d * w - sol.x[static_cast<size_t>(2 * t + 1)];
    }
    std::vector<std::pair<double, EicPair>> violated;
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        if (t == s) continue;
        const double v = eic_violation(inst, mech, t, s);
        if (v > kGenTol) violated.push_back({v, {t, s}});
      }
    if (violated.empty()) break;
    if (round < kKeepAllAfter) {
      std::vector<EicPair> kept;
      for (const EicPair& pr : working)
        if (eic_violation(inst, mech, pr.t, pr.s) > -kShedTol) kept.push_back(pr);
      working.swap(kept);
    }
    std::sort(violated.begin(), violated.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const size_t take = std::min(batch, violated.size());
    for (size_t i = 0; i < take; ++i) working.push_back(violated[i].second);
    lp.a.resize(base_rows);
    lp.b.resize(base_rows);
    for (const EicPair& pr : working) {
      lp.a.push_back(eic_row(inst, n, pr.t, pr.s));
      lp.b.push_back(0.0);
    }
  }

  // Re-verify the full constraint set on the returned mechanism.
  double worst = 0.0;
  for (int t = 0; t < n; ++t) {
    const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
    const double w = mech.w[static_cast<size_t>(t)];
    const double p = mech.p[static_cast<size_t>(t)];
    worst = std::max(worst, w - 1.0);
    worst = std::max(worst, -w);
    worst = std::max(worst, p - ty.v * ty.d * w);
    for (int s = 0; s < n; ++s)
      if (s != t) worst = std::max(worst, eic_violation(inst, mech, t, s));
  }
  if (worst > 1e-8) {
    std::ostringstream msg;
    msg << "lp_optimal: solution violates constraints by " << worst;
    throw NumericalError(msg.str());
  }
  for (double& w : mech.w) w = std::clamp(w, 0.0, 1.0);

  LpSolution out;
  out.mechanism = std::move(mech);
  out.revenue = sol.objective;
  return out;
}

double deterministic_menu_revenue(const DiscreteInstance& inst,
                                  const std::vector<int>& demands,
                                  const std::vector<double>& prices) {
  if (demands.size() != prices.size())
    throw std::invalid_argument(
        "deterministic_menu_revenue: demands and prices must match");
  const size_t m = demands.size();
  double total = 0.0;
  for (int t = 0; t < inst.n(); ++t) {
    const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
    double best_u = 0.0;
    for (size_t j = 0; j < m; ++j) {
      const double u = ty.v * std::min(ty.d, demands[j]) - prices[j];
      best_u = std::max(best_u, u);
    }
    // Seller-favorable tie-break: the highest-priced utility maximizer,
    // with ties detected at relative precision (chains of indifference
    // prices reproduce utilities only to rounding).
    const double eps = 1e-12 * (1.0 + std::abs(best_u) + ty.v * ty.d);
    double pay = 0.0;
    for (size_t j = 0; j < m; ++j) {
      const double u = ty.v * std::min(ty.d, demands[j]) - prices[j];
      if (u >= best_u - eps) pay = std::max(pay, prices[j]);
    }
    total += inst.probs()[static_cast<size_t>(t)] * pay;
  }
  return total;
}

DeterministicSolution deterministic_optimal(const DiscreteInstance& inst) {
  const std::vector<int> demands = inst.distinct_demands();
  const int m = static_cast<int>(demands.size());
  const int n = inst.n();
  if (m > 4)
    throw std::invalid_argument(
        "deterministic_optimal: more than 4 distinct demands");

  double v_max = 0.0;
  for (const DiscreteType& t : inst.types()) v_max = std::max(v_max, t.v);
  const double unsold_price = v_max * demands.back() + 1.0;

  // Parent code per bundle: 0 = unsold; 1..n = participation root with type
  // code-1; beyond that, (other bundle, type) indifference links.
  const int options = 1 + n + (m - 1) * n;
  std::vector<int> parent(static_cast<size_t>(m), 0);
  std::vector<double> price(static_cast<size_t>(m), 0.0);
  std::vector<char> resolved(static_cast<size_t>(m), 0);

  DeterministicSolution best;
  best.demands = demands;
  best.prices.assign(static_cast<size_t>(m), unsold_price);
  best.revenue = -1.0;

  while (true) {
    // Resolve prices; links need their source resolved first, so sweep up
    // to m times and drop cyclic combinations.
    std::fill(resolved.begin(), resolved.end(), 0);
    bool valid = true;
    for (int pass = 0; pass < m; ++pass) {
      for (int j = 0; j < m; ++j) {
        const size_t jj = static_cast<size_t>(j);
        if (resolved[jj]) continue;
        const int code = parent[jj];
        if (code == 0) {
          price[jj] = unsold_price;
          resolved[jj] = 1;
        } else if (code <= n) {
          const DiscreteType& ty = inst.types()[static_cast<size_t>(code - 1)];
          price[jj] = ty.v * std::min(ty.d, demands[jj]);
          resolved[jj] = 1;
        } else {
          const int rest = code - 1 - n;
          const int t = rest % n;
          int l = rest / n;
          if (l >= j) ++l;  // skip self in the link target numbering
          const size_t ll = static_cast<size_t>(l);
          if (!resolved[ll]) continue;
          const DiscreteType& ty = inst.types()[static_cast<size_t>(t)];
          price[jj] = price[ll] +
                      ty.v * (std::min(ty.d, demands[jj]) -
                              std::min(ty.d, demands[ll]));
          resolved[jj] = 1;
        }
      }
    }
    for (int j = 0; j < m && valid; ++j) {
      const size_t jj = static_cast<size_t>(j);
      if (!resolved[jj] || price[jj] < 0.0) valid = false;
    }
    if (valid) {
      const double r = deterministic_menu_revenue(inst, demands, price);
      if (r > best.revenue) {
        best.revenue = r;
        best.prices = price;
      }
    }
    // Odometer over parent codes.
    int pos = m - 1;
    while (pos >= 0 && parent[static_cast<size_t>(pos)] == options - 1) --pos;
    if (pos < 0) break;
    ++parent[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < m; ++j) parent[static_cast<size_t>(j)] = 0;
  }
  return best;
}

double determinism_gap(const DiscreteInstance& inst) {
  return lp_optimal(inst).revenue - deterministic_optimal(inst).revenue;
}

std::vector<ExpostPayment> expost_payments(const Mechanism& mech) {
  if (mech.w.size() != mech.p.size())
    throw std::invalid_argument("expost_payments: w and p must match");
  std::vector<ExpostPayment> out(mech.w.size());
  for (size_t t = 0; t < mech.w.size(); ++t) {
    if (mech.p[t] > 0.0 && mech.w[t] <= 0.0)
      throw std::invalid_argument(
          "expost_payments: positive payment with zero allocation");
    out[t].on_allocation = mech.w[t] > 0.0 ? mech.p[t] / mech.w[t] : 0.0;
    out[t].on_no_allocation = 0.0;
  }
  return out;
}

Mechanism support_transform(const std::vector<int>& units,
                            const std::vector<double>& payments,
                            const DiscreteInstance& inst) {
  const size_t n = static_cast<size_t>(inst.n());
  if (units.size() != n || payments.size() != n)
    throw std::invalid_argument("support_transform: size mismatch");
  Mechanism mech;
  mech.w.resize(n);
  mech.p = payments;
  for (size_t t = 0; t < n; ++t) {
    const int d = inst.types()[t].d;
    if (units[t] < 0 || units[t] > d)
      throw std::invalid_argument(
          "support_transform: units must lie in [0, demand]");
    mech.w[t] = static_cast<double>(units[t]) / d;
  }
  return mech;
}

DiscreteInstance discretize(const ProblemInstance& inst,
                            int points_per_demand) {
  if (points_per_demand < 1)
    throw std::invalid_argument("discretize: need at least one point");
  std::vector<DiscreteType> types;
  std::vector<double> probs;
  types.reserve(static_cast<size_t>(inst.k() * points_per_demand));
  probs.reserve(types.capacity());
  for (int i = 1; i <= inst.k(); ++i) {
    const Marginal& m = inst.marginal(i);
    const double q = inst.weight(i) / points_per_demand;
    for (int g = 1; g <= points_per_demand; ++g) {
      const double u = (g - 0.5) / points_per_demand;
      types.push_back({m.quantile(u), inst.demand(i)});
      probs.push_back(q);
    }
  }
  return DiscreteInstance(std::move(types), std::move(probs));
}

}  // namespace multiunit
