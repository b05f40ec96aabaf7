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

#include "multiunit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "multiunit/errors.hpp"
#include "multiunit/numeric.hpp"
#include "multiunit/rng.hpp"

namespace multiunit {
namespace {

// Increment-space view: p_i = c_1 + ... + c_i with c_i in [0, cap_i],
// cap_i = (d_i - d_{i-1}) v_bar.  Within the box every pairwise
// indifference threshold lies in [0, v_bar], which is exactly where the
// revenue function is concave; menus outside only reprice dead bundles.
std::vector<double> increment_caps(const ProblemInstance& inst) {
  std::vector<double> caps(static_cast<size_t>(inst.k()));
  for (int i = 1; i <= inst.k(); ++i)
    caps[static_cast<size_t>(i) - 1] =
        (inst.demand(i) - inst.demand(i - 1)) * inst.v_bar();
  return caps;
}

PriceVector prices_from_increments(const std::vector<double>& c) {
  std::vector<double> p(c.size());
  double acc = 0.0;
  for (size_t i = 0; i < c.size(); ++i) {
    acc += c[i];
    p[i] = acc;
  }
  return PriceVector(std::move(p));
}

double checked_rev(const std::vector<double>& c, const ProblemInstance& inst) {
  const double r = rev(prices_from_increments(c), inst);
  if (!std::isfinite(r))
    throw NumericalError("optimizer: objective is not finite");
  return r;
}

// One golden-section pass per increment coordinate; each 1-D restriction of
// a concave objective is concave.  Returns the polished objective value.
double polish_sweeps(std::vector<double>& c, const std::vector<double>& caps,
                     const ProblemInstance& inst, double tol, int max_sweeps) {
  double best = checked_rev(c, inst);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = best;
    for (size_t j = 0; j < c.size(); ++j) {
      const double x = golden_max(
          [&](double cj) {
            std::vector<double> trial = c;
            trial[j] = cj;
            return checked_rev(trial, inst);
          },
          0.0, caps[j], 1e-10 * std::max(1.0, caps[j]));
      std::vector<double> trial = c;
      trial[j] = x;
      const double r = checked_rev(trial, inst);
      if (r > best) {
        best = r;
        c = trial;
      }
    }
    if (best - before < tol) break;
  }
  return best;
}

struct AscentOutcome {
  std::vector<double> c;
  double rev = 0.0;
  long long iterations = 0;
};

AscentOutcome ascend(std::vector<double> c, const std::vector<double>& caps,
                     const ProblemInstance& inst, const OptimizeConfig& cfg,
                     double eta0) {
  const int k = inst.k();
  AscentOutcome out;
  out.c = c;
  out.rev = checked_rev(c, inst);
  long long t = 0;
  constexpr long long kBlock = 200;
  while (t < cfg.max_iters) {
    const long long stop = std::min(cfg.max_iters, t + kBlock);
    for (; t < stop; ++t) {
      const std::vector<double> g =
          supergradient(prices_from_increments(c), inst);
      // Chain rule through the prefix sums: the step along c_j collects
      // every price from j upward.
      double suffix = 0.0;
      const double eta = eta0 / std::pow(static_cast<double>(t + 1), cfg.decay);
      std::vector<double> stepped(c);
      for (int j = k; j >= 1; --j) {
        suffix += g[static_cast<size_t>(j)];
        const size_t jj = static_cast<size_t>(j) - 1;
        stepped[jj] = std::clamp(c[jj] + eta * suffix, 0.0, caps[jj]);
      }
      c = std::move(stepped);
      const double r = checked_rev(c, inst);
      if (r > out.rev) {
        out.rev = r;
        out.c = c;
      }
    }
    // Polish the incumbent; a pass that no longer moves the objective by
    // tol means the ascent has flattened out.
    std::vector<double> polished = out.c;
    const double r = polish_sweeps(polished, caps, inst, cfg.tol, 1);
    const double gain = r - out.rev;
    if (r > out.rev) {
      out.rev = r;
      out.c = polished;
    }
    if (gain < cfg.tol) break;
  }
  out.iterations = t;
  return out;
}

}  // namespace

PriceVector project_ordered(const std::vector<double>& raw, double upper) {
  if (raw.empty())
    throw std::invalid_argument("project_ordered: need at least one entry");
  if (!(upper > 0.0) || !std::isfinite(upper))
    throw std::invalid_argument("project_ordered: upper must be positive");
  for (double x : raw)
    if (!std::isfinite(x))
      throw std::invalid_argument("project_ordered: entries must be finite");
  // Pool adjacent violators: merge blocks whose means would decrease.
  const size_t n = raw.size();
  std::vector<double> mean;
  std::vector<size_t> count;
  mean.reserve(n);
  count.reserve(n);
  for (double x : raw) {
    mean.push_back(x);
    count.push_back(1);
    while (mean.size() > 1 && mean[mean.size() - 2] >= mean.back()) {
      const double m2 = mean.back();
      const size_t c2 = count.back();
      mean.pop_back();
      count.pop_back();
      mean.back() = (mean.back() * static_cast<double>(count.back()) +
                     m2 * static_cast<double>(c2)) /
                    static_cast<double>(count.back() + c2);
      count.back() += c2;
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (size_t b = 0; b < mean.size(); ++b)
    out.insert(out.end(), count[b], std::clamp(mean[b], 0.0, upper));
  return PriceVector(std::move(out));
}

OptimizeResult maximize(const ProblemInstance& inst,
                        const OptimizeConfig& cfg) {
  if (cfg.max_iters < 1 || !(cfg.tol > 0.0) || cfg.restarts < 1)
    throw std::invalid_argument("maximize: invalid config");
  const int k = inst.k();
  const std::vector<double> caps = increment_caps(inst);
  const double scale = inst.demand(k) * inst.v_bar();
  const double eta0 = cfg.eta0 > 0.0 ? cfg.eta0 : 0.1 * scale;

  Rng rng(cfg.seed);
  AscentOutcome best;
  best.rev = -1.0;
  long long total_iters = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> c0(static_cast<size_t>(k));
    if (r == 0) {
      // Warm start at the per-marginal monopoly menu p_i ~ v_hat_i d_i.
      double prev = 0.0;
      for (int i = 1; i <= k; ++i) {
        const double v_hat =
            golden_max([&](double v) { return inst.marginal(i).revenue_curve(v); },
                       0.0, inst.v_bar(), 1e-8 * std::max(1.0, inst.v_bar()));
        const double p = v_hat * inst.demand(i);
        c0[static_cast<size_t>(i) - 1] =
            std::clamp(p - prev, 0.0, caps[static_cast<size_t>(i) - 1]);
        prev += c0[static_cast<size_t>(i) - 1];
      }
    } else {
      for (int i = 0; i < k; ++i)
        c0[static_cast<size_t>(i)] =
            uniform_in(rng, 0.0, caps[static_cast<size_t>(i)]);
    }
    AscentOutcome run = ascend(std::move(c0), caps, inst, cfg, eta0);
    total_iters += run.iterations;
    if (run.rev > best.rev) best = std::move(run);
  }
  polish_sweeps(best.c, caps, inst, cfg.tol, 40);

  OptimizeResult result{prices_from_increments(best.c), 0.0, total_iters, 0.0,
                        inst.all_dmr()};
  result.rev_star = rev(result.p_star, inst);
  result.certificate = optimality_certificate(result.p_star, inst);
  return result;
}

OptimizeResult grid_search(const ProblemInstance& inst, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("grid_search: resolution must be >= 2");
  const int k = inst.k();
  const double upper = inst.demand(k) * inst.v_bar();
  const double h = upper / (resolution - 1);

  std::vector<int> idx(static_cast<size_t>(k), 0);
  std::vector<double> p(static_cast<size_t>(k), 0.0);
  std::vector<double> best_p(static_cast<size_t>(k), 0.0);
  double best_rev = -1.0;
  long long evals = 0;
  // Odometer over ordered index tuples idx_1 <= ... <= idx_k.
  while (true) {
    for (int i = 0; i < k; ++i)
      p[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)] * h;
    const double r = rev(PriceVector(p), inst);
    ++evals;
    if (r > best_rev) {
      best_rev = r;
      best_p = p;
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == resolution - 1) --pos;
    if (pos < 0) break;
    const int v = ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<size_t>(i)] = v;
  }
  OptimizeResult result{PriceVector(best_p), 0.0, evals, 0.0, inst.all_dmr()};
  result.rev_star = rev(result.p_star, inst);
  result.certificate = optimality_certificate(result.p_star, inst);
  return result;
}

OptimizeResult grid_search_refined(const ProblemInstance& inst, int resolution,
                                   int rounds) {
  OptimizeResult best = grid_search(inst, resolution);
  const int k = inst.k();
  const double upper = inst.demand(k) * inst.v_bar();
  double h = upper / (resolution - 1);
  for (int round = 0; round < rounds; ++round) {
    // Re-grid the box [p_i - h, p_i + h] around the incumbent at the same
    // resolution; skip unordered tuples.
    std::vector<double> lo(static_cast<size_t>(k)), hi(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      lo[static_cast<size_t>(i)] =
          std::max(0.0, best.p_star[i + 1] - h);
      hi[static_cast<size_t>(i)] =
          std::min(upper, best.p_star[i + 1] + h);
    }
    std::vector<int> idx(static_cast<size_t>(k), 0);
    while (true) {
      std::vector<double> p(static_cast<size_t>(k));
      bool ordered = true;
      double prev = 0.0;
      for (int i = 0; i < k; ++i) {
        const size_t ii = static_cast<size_t>(i);
        p[ii] = lo[ii] + (hi[ii] - lo[ii]) * idx[ii] / (resolution - 1);
        if (p[ii] < prev) ordered = false;
        prev = p[ii];
      }
      if (ordered) {
        const double r = rev(PriceVector(p), inst);
        ++best.iterations;
        if (r > best.rev_star) {
          best.rev_star = r;
          best.p_star = PriceVector(p);
        }
      }
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == resolution - 1)
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) idx[static_cast<size_t>(i)] = 0;
    }
    h *= 2.0 / (resolution - 1);
  }
  best.rev_star = rev(best.p_star, inst);
  best.certificate = optimality_certificate(best.p_star, inst);
  return best;
}

double optimality_certificate(const PriceVector& p, const ProblemInstance& inst,
                              double h) {
  const int k = inst.k();
  const double upper = inst.demand(k) * inst.v_bar();
  const double base = rev(p, inst);
  double worst = -std::numeric_limits<double>::infinity();
  for (int m = 1; m <= k; ++m) {
    const double up_room = (m == k ? upper : p[m + 1]) - p[m];
    if (up_room >= h) {
      std::vector<double> q = p.values();
      q[static_cast<size_t>(m) - 1] += h;
      worst = std::max(worst, (rev(PriceVector(q), inst) - base) / h);
    }
    const double down_room = p[m] - p[m - 1];
    if (down_room >= h) {
      std::vector<double> q = p.values();
      q[static_cast<size_t>(m) - 1] -= h;
      worst = std::max(worst, (rev(PriceVector(q), inst) - base) / h);
    }
  }
  return std::isfinite(worst) ? worst : 0.0;
}

}  // namespace multiunit
