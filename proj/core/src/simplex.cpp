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

#include "multiunit/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace multiunit {
namespace {

constexpr double kReducedCostTol = 1e-9;
// Preferred and fallback admission thresholds for ratio-test pivots; tiny
// pivot elements amplify roundoff, so larger ones are taken when available.
constexpr double kPivotTol = 1e-7;
constexpr double kPivotTolLoose = 1e-11;

}  // namespace

LpResult solve_lp(const LpProblem& lp, long long max_pivots) {
  const size_t m = lp.a.size();
  const size_t n = lp.c.size();
  if (lp.b.size() != m)
    throw std::invalid_argument("simplex: b length must match row count");
  for (const auto& row : lp.a)
    if (row.size() != n)
      throw std::invalid_argument("simplex: row length must match c");
  for (double bi : lp.b) {
    if (!std::isfinite(bi) || bi < 0.0)
      throw std::invalid_argument("simplex: b must be finite and >= 0");
  }

  // Tableau rows 0..m-1: constraints over structural + slack columns, with
  // the rhs last; row m: reduced costs and (negated) objective value.
  const size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (size_t r = 0; r < m; ++r) {
    for (size_t j = 0; j < n; ++j) t[r][j] = lp.a[r][j];
    t[r][n + r] = 1.0;
    t[r][cols - 1] = lp.b[r];
  }
  for (size_t j = 0; j < n; ++j) t[m][j] = lp.c[j];

  std::vector<size_t> basis(m);
  for (size_t r = 0; r < m; ++r) basis[r] = n + r;

  LpResult result;
  std::vector<size_t> cand;
  std::vector<size_t> next;

  while (result.pivots < max_pivots) {
    // Entering column: most positive reduced cost.
    size_t enter = cols;
    double best_rc = kReducedCostTol;
    for (size_t j = 0; j + 1 < cols; ++j) {
      const double rc = t[m][j];
      if (rc > best_rc) {
        enter = j;
        best_rc = rc;
      }
    }
    if (enter == cols) {
      result.status = LpStatus::kOptimal;
      break;
    }

    // True minimum ratio over every admissible pivot, then a tolerance band
    // around it in which well-scaled pivot elements are preferred; tiny
    // pivots amplify roundoff and are taken only when nothing else ties.
    double best_ratio = std::numeric_limits<double>::infinity();
    for (size_t r = 0; r < m; ++r) {
      const double a = t[r][enter];
      if (a <= kPivotTolLoose) continue;
      best_ratio = std::min(best_ratio, t[r][cols - 1] / a);
    }
    if (best_ratio == std::numeric_limits<double>::infinity()) {
      result.status = LpStatus::kUnbounded;
      break;
    }
    const double ratio_tol = 1e-9 * (1.0 + std::abs(best_ratio));
    cand.clear();
    bool any_preferred = false;
    for (size_t r = 0; r < m; ++r) {
      const double a = t[r][enter];
      if (a > kPivotTolLoose && t[r][cols - 1] / a <= best_ratio + ratio_tol) {
        cand.push_back(r);
        any_preferred = any_preferred || a > kPivotTol;
      }
    }
    if (any_preferred) {
      next.clear();
      for (size_t r : cand)
        if (t[r][enter] > kPivotTol) next.push_back(r);
      cand.swap(next);
    }

    // Lexicographic tie-break: minimize the scaled row (rhs, basis-inverse
    // columns) entry by entry.  The basis-inverse block has distinct rows,
    // so the winner is unique and no basis can repeat.
    size_t leave = cand[0];
    if (cand.size() > 1) {
      for (size_t phase = 0; phase <= m && cand.size() > 1; ++phase) {
        const size_t c = phase == 0 ? cols - 1 : n + (phase - 1);
        double lo = std::numeric_limits<double>::infinity();
        for (size_t r : cand) lo = std::min(lo, t[r][c] / t[r][enter]);
        const double tol = 1e-12 * (1.0 + std::abs(lo));
        next.clear();
        for (size_t r : cand)
          if (t[r][c] / t[r][enter] <= lo + tol) next.push_back(r);
        cand.swap(next);
      }
      leave = cand[0];
    }

    // Pivot
    const double piv = t[leave][enter];
    for (size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = t[r][enter];
      if (f == 0.0) continue;
      for (size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    // Feasibility is an invariant; sub-tolerance negative right-hand sides
    // are roundoff from banded ratio ties and are snapped back to zero.
    for (size_t r = 0; r < m; ++r)
      if (t[r][cols - 1] < 0.0 && t[r][cols - 1] > -1e-9) t[r][cols - 1] = 0.0;
    ++result.pivots;
  }

  result.x.assign(n, 0.0);
  for (size_t r = 0; r < m; ++r)
    if (basis[r] < n) result.x[basis[r]] = t[r][cols - 1];
  result.objective = -t[m][cols - 1];
  return result;
}

}  // namespace multiunit
