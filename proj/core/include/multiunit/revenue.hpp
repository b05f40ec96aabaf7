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

#include <cstdint>
#include <vector>

#include "multiunit/instance.hpp"

namespace multiunit {

// Ordered menu prices p_1 <= ... <= p_k with the implicit no-purchase
// sentinel p_0 = 0 stored explicitly at slot 0.
class PriceVector {
 public:
  // prices are p_1..p_k; must be non-negative, finite, non-decreasing.
  // Throws std::invalid_argument otherwise.
  explicit PriceVector(std::vector<double> prices);

  int k() const { return static_cast<int>(p_.size()) - 1; }
  // i in [0, k]; p[0] == 0.
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  // p_1..p_k without the sentinel.
  std::vector<double> values() const;
  // Full storage including the sentinel at slot 0.
  const std::vector<double>& with_sentinel() const { return p_; }

 private:
  std::vector<double> p_;
};

// Region assignment: next[i] is the lower bundle whose indifference
// threshold with i is largest; paths[i] chases next down to 0.
struct SigmaAssignment {
  // Length k+1; next[0] == 0 is unused; next[i] in {0,...,i-1}.
  std::vector<int> next;
  // paths[i] = (i, next[i], next[next[i]], ..., 0); paths[0] = (0).
  std::vector<std::vector<int>> paths;

  // Builds paths from a bare next array and validates next[i] < i.
  static SigmaAssignment from_next(std::vector<int> next);
};

// Indifference threshold D_{j,l} = (p_j - p_l)/(d_j - d_l) for j > l >= 0,
// with the slot-0 sentinel giving D_{j,0} = p_j/d_j.
// Throws std::invalid_argument unless k >= j > l >= 0.
double threshold(const PriceVector& p, const ProblemInstance& inst, int j,
                 int l);

struct ConvexCombinationIdentity {
  double lambda = 0.0;  // weight on the lower pair D_{j,l}
  double lhs = 0.0;     // D_{i,l}
  double rhs = 0.0;     // (1-lambda) D_{i,j} + lambda D_{j,l}
};

// D_{i,l} is the convex combination of D_{i,j} and D_{j,l} with weight
// lambda = (d_j - d_l)/(d_i - d_l) on D_{j,l}.  Requires i > j > l >= 0.
ConvexCombinationIdentity convex_combination_identity(const PriceVector& p,
                                                      const ProblemInstance& inst,
                                                      int i, int j, int l);

// Utility-maximizing bundle for a buyer with per-unit value v and demand d
// (one of the instance's demand levels, say d_i): argmax over j in {0,...,i}
// of v d_j - p_j, ties broken toward the larger bundle.
int best_bundle(double v, int d, const PriceVector& p,
                const ProblemInstance& inst);

// next[i] maximizes D_{i,j} over j < i, ties toward the largest j.
SigmaAssignment assign_sigma(const PriceVector& p, const ProblemInstance& inst);

// Closed-form expected revenue for a fixed region assignment:
//   sum_i q_i [ p_i (1 - F_i(D_{i,s(i)}))
//             + sum_{j in paths[i], s(j)>0} p_{s(j)} (F_i(D_{j,s(j)}) - F_i(D_{s(j),s^2(j)})) ]
// with every threshold clamped to [0, v_bar] before applying F_i.
double rev_sigma(const PriceVector& p, const SigmaAssignment& sigma,
                 const ProblemInstance& inst);

// Exact expected revenue: rev_sigma at the assignment of p itself.
double rev(const PriceVector& p, const ProblemInstance& inst);

// Independent cross-check: integrates the price paid by the best response
// against each marginal by adaptive quadrature between switch points.
// Throws NumericalError if the quadrature tolerance cannot be certified.
double rev_by_integration(const PriceVector& p, const ProblemInstance& inst,
                          double abs_tol = 1e-8);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Samples demand by weight and value by inverse CDF, then charges the best
// response.  Deterministic given the seed.
McEstimate rev_monte_carlo(const PriceVector& p, const ProblemInstance& inst,
                           long long n, std::uint64_t seed);

// Gradient of rev_sigma at sigma = assign_sigma(p), length k+1 with slot 0
// fixed at 0.  On region boundaries adjacent assignments give the same
// vector, so this is the gradient wherever rev is differentiable and a
// supergradient at kinks.
std::vector<double> supergradient(const PriceVector& p,
                                  const ProblemInstance& inst);

}  // namespace multiunit
