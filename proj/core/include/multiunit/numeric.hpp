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

#pragma once

#include <functional>

namespace multiunit {

/**
 * Adaptive Simpson quadrature of f over [lo, hi].
 *
 * Recursion halves an interval until the local Richardson error estimate
 * fits its share of abs_tol.  The share halves with each split, so a jump
 * discontinuity inside the range keeps a constant estimate-to-share ratio
 * and cannot be certified: callers must cut ranges at known breakpoints.
 * Kinks (derivative jumps) converge fine.
 *
 * @throws NumericalError if the requested tolerance cannot be certified.
 */
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-8, int max_depth = 40);

/**
 * Argmax of f over [lo, hi] for unimodal (in particular concave) f.
 *
 * A scan over scan_points equally spaced points brackets the maximum, then
 * golden-section search refines the bracket to width tol.  The scan makes
 * the routine robust to plateaus and to objectives that are only
 * quasi-concave; any point achieving the max within tol may be returned.
 */
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-10, int scan_points = 129);

/**
 * Inverse of the standard normal CDF, |error| < 1e-13 over (0, 1).
 * Rational initial guess refined by one Halley step on erfc.
 */
double inverse_normal_cdf(double u);

}  // namespace multiunit
