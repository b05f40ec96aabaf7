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

#include "multiunit/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "multiunit/errors.hpp"

namespace multiunit {
namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
  bool depth_exhausted = false;
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = st.f(lm);
  double frm = st.f(rm);
  double left = simpson(fa, flm, fm, a, m);
  double right = simpson(fm, frm, fb, m, b);
  double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth >= st.max_depth) {
    if (std::abs(delta) > 15.0 * tol) st.depth_exhausted = true;
    return left + right + delta / 15.0;
  }
  return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("integrate: lo > hi");
  if (lo == hi) return 0.0;
  SimpsonState st{f, max_depth};
  double fa = f(lo);
  double fb = f(hi);
  double m = 0.5 * (lo + hi);
  double fm = f(m);
  double whole = simpson(fa, fm, fb, lo, hi);
  double result = simpson_rec(st, lo, hi, fa, fm, fb, whole, abs_tol, 0);
  if (st.depth_exhausted) {
    throw NumericalError("integrate: tolerance not certified at max depth " +
                         std::to_string(max_depth));
  }
  if (!std::isfinite(result)) {
    throw NumericalError("integrate: non-finite result");
  }
  return result;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int scan_points) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_max: lo > hi");
  if (scan_points < 3) throw std::invalid_argument("golden_max: scan_points < 3");
  if (hi - lo <= tol) return 0.5 * (lo + hi);

  // Bracket the maximum on a coarse scan.
  double best_x = lo;
  double best_y = f(lo);
  double h = (hi - lo) / (scan_points - 1);
  for (int i = 1; i < scan_points; ++i) {
    double x = (i == scan_points - 1) ? hi : lo + i * h;
    double y = f(x);
    if (y > best_y) {
      best_y = y;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - h);
  double b = std::min(hi, best_x + h);

  // Golden-section refinement inside [a, b].
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  double mid = 0.5 * (a + b);
  // The scan best can beat the refined bracket on plateau edges; keep the max.
  return f(mid) >= best_y ? mid : best_x;
}

double inverse_normal_cdf(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("inverse_normal_cdf: u outside (0,1)");
  }
  // Rational approximation in three regimes (Acklam's coefficients).
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  double x;
  if (u < kLow) {
    double q = std::sqrt(-2.0 * std::log(u));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (u <= 1.0 - kLow) {
    double q = u - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - u));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley step against the exact CDF brings the error near machine eps.
  constexpr double kSqrt2Pi = 2.5066282746310002;
  double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - u;
  double w = e * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= w / (1.0 + 0.5 * x * w);
  return x;
}

}  // namespace multiunit
