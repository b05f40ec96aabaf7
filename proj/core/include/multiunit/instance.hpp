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

#include <vector>

#include "multiunit/marginal.hpp"

namespace multiunit {

// A pricing problem: a buyer has demand d_i with probability q_i, and given
// demand d_i draws a per-unit value from marginal i, supported on [0, v_bar].
// Demand levels are 1-based; index 0 is the reserved no-purchase slot with
// demand(0) == 0.
class ProblemInstance {
 public:
  // demands must be strictly increasing positive integers; weights must be
  // positive and sum to 1 within 1e-12; marginals must match demands in
  // length and share v_bar.  Throws std::invalid_argument.
  ProblemInstance(std::vector<int> demands, std::vector<double> weights,
                  std::vector<Marginal> marginals);

  int k() const { return static_cast<int>(demands_.size()); }
  double v_bar() const { return v_bar_; }

  // i in [0, k]; demand(0) == 0.
  int demand(int i) const;
  // i in [1, k].
  double weight(int i) const;
  const Marginal& marginal(int i) const;

  const std::vector<int>& demands() const { return demands_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Marginal>& marginals() const { return marginals_; }

  // True when every marginal has a concave revenue curve.
  bool all_dmr(int grid_n = kDefaultClassifyGrid) const;

 private:
  std::vector<int> demands_;
  std::vector<double> weights_;
  std::vector<Marginal> marginals_;
  double v_bar_ = 1.0;
};

}  // namespace multiunit
