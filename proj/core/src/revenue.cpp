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

#include "multiunit/revenue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "multiunit/numeric.hpp"
#include "multiunit/rng.hpp"

namespace multiunit {
namespace {

// Points where a marginal's density jumps or kinks; quadrature segments are
// split there so each piece is smooth.
void collect_density_breakpoints(const Marginal& m, std::vector<double>& out) {
  switch (m.kind()) {
    case Marginal::Kind::kUniform: {
      const auto& p = std::get<UniformParams>(m.params());
      out.push_back(p.lo);
      out.push_back(std::min(p.hi, m.v_bar()));
      break;
    }
    case Marginal::Kind::kConstantElasticity:
      out.push_back(std::get<ConstantElasticityParams>(m.params()).scale);
      break;
    case Marginal::Kind::kPiecewiseLinearCdf: {
      const auto& p = std::get<PiecewiseLinearCdfParams>(m.params());
      out.insert(out.end(), p.values.begin(), p.values.end());
      break;
    }
    case Marginal::Kind::kMixture: {
      const auto& p = std::get<MixtureParams>(m.params());
      for (const Marginal& c : p.components)
        collect_density_breakpoints(c, out);
      break;
    }
    case Marginal::Kind::kTruncatedNormal:
    case Marginal::Kind::kExponentialTruncated:
      break;
  }
}

int demand_index(const ProblemInstance& inst, int d) {
  for (int i = 1; i <= inst.k(); ++i)
    if (inst.demand(i) == d) return i;
  throw std::invalid_argument("revenue: demand is not one of the instance's");
}

}  // namespace

PriceVector::PriceVector(std::vector<double> prices) {
  if (prices.empty())
    throw std::invalid_argument("prices: need at least one entry");
  double prev = 0.0;
  for (double x : prices) {
    if (!std::isfinite(x))
      throw std::invalid_argument("prices: entries must be finite");
    if (x < prev)
      throw std::invalid_argument(
          "prices: entries must be non-negative and non-decreasing");
    prev = x;
  }
  p_.reserve(prices.size() + 1);
  p_.push_back(0.0);
  p_.insert(p_.end(), prices.begin(), prices.end());
}

std::vector<double> PriceVector::values() const {
  return std::vector<double>(p_.begin() + 1, p_.end());
}

SigmaAssignment SigmaAssignment::from_next(std::vector<int> next) {
  if (next.empty() || next[0] != 0)
    throw std::invalid_argument("sigma: next[0] must exist and be 0");
  const int k = static_cast<int>(next.size()) - 1;
  for (int i = 1; i <= k; ++i)
    if (next[static_cast<size_t>(i)] < 0 || next[static_cast<size_t>(i)] >= i)
      throw std::invalid_argument("sigma: next[i] must lie in {0,...,i-1}");
  SigmaAssignment s;
  s.next = std::move(next);
  s.paths.resize(static_cast<size_t>(k) + 1);
  s.paths[0] = {0};
  for (int i = 1; i <= k; ++i) {
    std::vector<int>& path = s.paths[static_cast<size_t>(i)];
    for (int j = i; j > 0; j = s.next[static_cast<size_t>(j)]) path.push_back(j);
    path.push_back(0);
  }
  return s;
}

double threshold(const PriceVector& p, const ProblemInstance& inst, int j,
                 int l) {
  if (!(j > l && l >= 0 && j <= inst.k()))
    throw std::invalid_argument("threshold: need k >= j > l >= 0");
  return (p[j] - p[l]) / (inst.demand(j) - inst.demand(l));
}

ConvexCombinationIdentity convex_combination_identity(
    const PriceVector& p, const ProblemInstance& inst, int i, int j, int l) {
  if (!(i > j && j > l && l >= 0 && i <= inst.k()))
    throw std::invalid_argument(
        "convex_combination_identity: need k >= i > j > l >= 0");
  ConvexCombinationIdentity out;
  out.lambda = static_cast<double>(inst.demand(j) - inst.demand(l)) /
               (inst.demand(i) - inst.demand(l));
  out.lhs = threshold(p, inst, i, l);
  out.rhs = (1.0 - out.lambda) * threshold(p, inst, i, j) +
            out.lambda * threshold(p, inst, j, l);
  return out;
}

int best_bundle(double v, int d, const PriceVector& p,
                const ProblemInstance& inst) {
  const int i = demand_index(inst, d);
  int best = 0;
  double best_u = 0.0;  // j = 0: zero units, zero price
  for (int j = 1; j <= i; ++j) {
    const double u = v * inst.demand(j) - p[j];
    if (u >= best_u) {
      best = j;
      best_u = u;
    }
  }
  return best;
}

SigmaAssignment assign_sigma(const PriceVector& p,
                             const ProblemInstance& inst) {
  const int k = inst.k();
  std::vector<int> next(static_cast<size_t>(k) + 1, 0);
  for (int i = 2; i <= k; ++i) {
    int arg = 0;
    double best = threshold(p, inst, i, 0);
    for (int j = 1; j < i; ++j) {
      const double d = threshold(p, inst, i, j);
      if (d >= best) {
        arg = j;
        best = d;
      }
    }
    next[static_cast<size_t>(i)] = arg;
  }
  return SigmaAssignment::from_next(std::move(next));
}

double rev_sigma(const PriceVector& p, const SigmaAssignment& sigma,
                 const ProblemInstance& inst) {
  const int k = inst.k();
  if (static_cast<int>(sigma.next.size()) != k + 1)
    throw std::invalid_argument("rev_sigma: sigma length mismatch");
  const double v_bar = inst.v_bar();
  auto clamped = [&](int j, int l) {
    return std::clamp(threshold(p, inst, j, l), 0.0, v_bar);
  };
  double total = 0.0;
  for (int i = 1; i <= k; ++i) {
    const Marginal& m = inst.marginal(i);
    const int s_i = sigma.next[static_cast<size_t>(i)];
    double term = p[i] * (1.0 - m.cdf(clamped(i, s_i)));
    // Walk the chain below i; each hop sells the lower bundle of the pair
    // on the value interval between consecutive thresholds.
    for (int j = i; sigma.next[static_cast<size_t>(j)] > 0;
         j = sigma.next[static_cast<size_t>(j)]) {
      const int l = sigma.next[static_cast<size_t>(j)];
      const int ll = sigma.next[static_cast<size_t>(l)];
      term += p[l] * (m.cdf(clamped(j, l)) - m.cdf(clamped(l, ll)));
    }
    total += inst.weight(i) * term;
  }
  return total;
}

double rev(const PriceVector& p, const ProblemInstance& inst) {
  return rev_sigma(p, assign_sigma(p, inst), inst);
}

double rev_by_integration(const PriceVector& p, const ProblemInstance& inst,
                          double abs_tol) {
  const int k = inst.k();
  const double v_bar = inst.v_bar();
  double total = 0.0;
  for (int i = 1; i <= k; ++i) {
    const Marginal& m = inst.marginal(i);
    // Cut at every candidate switch point of the best response and at every
    // density breakpoint, so the integrand is smooth on each segment.
    std::vector<double> cuts{0.0, v_bar};
    for (int j = 1; j <= i; ++j)
      for (int l = 0; l < j; ++l) {
        const double d = threshold(p, inst, j, l);
        if (d > 0.0 && d < v_bar) cuts.push_back(d);
      }
    collect_density_breakpoints(m, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    while (!cuts.empty() && cuts.front() < 0.0) cuts.erase(cuts.begin());
    while (!cuts.empty() && cuts.back() > v_bar) cuts.pop_back();

    const double seg_tol =
        abs_tol / (static_cast<double>(k) *
                   static_cast<double>(std::max<size_t>(cuts.size(), 2)) *
                   std::max(1.0, p[k]));
    double expected = 0.0;
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
      const double a = cuts[s], b = cuts[s + 1];
      if (!(b > a)) continue;
      const int bundle = best_bundle(0.5 * (a + b), inst.demand(i), p, inst);
      const double price = p[bundle];
      if (price == 0.0) continue;
      // The density is smooth on the open segment; endpoint samples take the
      // interior limit so a jump sitting exactly on a cut cannot defeat the
      // quadrature error estimate.
      const double nudge = (b - a) * 1e-12;
      const double mass = integrate(
          [&](double v) {
            if (v <= a) v = a + nudge;
            if (v >= b) v = b - nudge;
            return m.pdf(v);
          },
          a, b, seg_tol);
      expected += price * mass;
    }
    total += inst.weight(i) * expected;
  }
  return total;
}

McEstimate rev_monte_carlo(const PriceVector& p, const ProblemInstance& inst,
                           long long n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("rev_monte_carlo: n must be >= 1");
  Rng rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (long long t = 1; t <= n; ++t) {
    const int i = 1 + static_cast<int>(sample_index(rng, inst.weights()));
    const double v = inst.marginal(i).sample(rng);
    const double paid = p[best_bundle(v, inst.demand(i), p, inst)];
    const double delta = paid - mean;
    mean += delta / static_cast<double>(t);
    m2 += delta * (paid - mean);
  }
  McEstimate out;
  out.mean = mean;
  out.std_error =
      n > 1 ? std::sqrt(m2 / (static_cast<double>(n - 1) *
                              static_cast<double>(n)))
            : 0.0;
  return out;
}

std::vector<double> supergradient(const PriceVector& p,
                                  const ProblemInstance& inst) {
  const int k = inst.k();
  const double v_bar = inst.v_bar();
  const SigmaAssignment sigma = assign_sigma(p, inst);
  std::vector<double> g(static_cast<size_t>(k) + 1, 0.0);
  // Differentiates the equivalent telescoped form
  //   sum_i q_i [ p_i - sum_{j in paths[i]} F_i(D_{j,s(j)}) (p_j - p_{s(j)}) ]
  // which matches rev_sigma identically for any clamped CDF values.
  for (int i = 1; i <= k; ++i) {
    const Marginal& m = inst.marginal(i);
    const double q = inst.weight(i);
    g[static_cast<size_t>(i)] += q;
    for (int j = i; j > 0; j = sigma.next[static_cast<size_t>(j)]) {
      const int l = sigma.next[static_cast<size_t>(j)];
      const double d = threshold(p, inst, j, l);
      // d F(D) (p_j - p_l) / d p = [F(D) + f(D) D] on the unclamped branch;
      // past v_bar the clamp freezes F at 1.
      const double w = d > v_bar
                           ? 1.0
                           : m.cdf_clamped(d) + m.pdf_clamped(d) * d;
      g[static_cast<size_t>(j)] -= q * w;
      if (l > 0) g[static_cast<size_t>(l)] += q * w;
    }
  }
  return g;
}

}  // namespace multiunit
