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

#include "multiunit/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace multiunit {

ProblemInstance::ProblemInstance(std::vector<int> demands,
                                 std::vector<double> weights,
                                 std::vector<Marginal> marginals)
    : demands_(std::move(demands)),
      weights_(std::move(weights)),
      marginals_(std::move(marginals)) {
  if (demands_.empty())
    throw std::invalid_argument("instance: need at least one demand level");
  if (weights_.size() != demands_.size() ||
      marginals_.size() != demands_.size())
    throw std::invalid_argument(
        "instance: demands, weights, marginals must have equal length");
  int prev = 0;
  for (int d : demands_) {
    if (d <= prev)
      throw std::invalid_argument(
          "instance: demands must be strictly increasing positive integers");
    prev = d;
  }
  double sum = 0.0;
  for (double q : weights_) {
    if (!(q > 0.0) || !std::isfinite(q))
      throw std::invalid_argument("instance: weights must be positive");
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("instance: weights must sum to 1");
  v_bar_ = marginals_.front().v_bar();
  for (const Marginal& m : marginals_)
    if (m.v_bar() != v_bar_)
      throw std::invalid_argument("instance: marginals must share v_bar");
}

int ProblemInstance::demand(int i) const {
  if (i < 0 || i > k())
    throw std::invalid_argument("instance: demand index out of range");
  return i == 0 ? 0 : demands_[static_cast<size_t>(i) - 1];
}

double ProblemInstance::weight(int i) const {
  if (i < 1 || i > k())
    throw std::invalid_argument("instance: weight index out of range");
  return weights_[static_cast<size_t>(i) - 1];
}

const Marginal& ProblemInstance::marginal(int i) const {
  if (i < 1 || i > k())
    throw std::invalid_argument("instance: marginal index out of range");
  return marginals_[static_cast<size_t>(i) - 1];
}

bool ProblemInstance::all_dmr(int grid_n) const {
  for (const Marginal& m : marginals_)
    if (!m.is_dmr(grid_n).dmr) return false;
  return true;
}

}  // namespace multiunit
