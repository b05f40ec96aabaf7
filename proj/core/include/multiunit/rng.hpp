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
#include <random>
#include <span>
#include <stdexcept>

namespace multiunit {

// All randomized routines take an explicit engine so runs are reproducible
// from a seed.  Draws below avoid std::uniform_real_distribution, whose
// output is implementation-defined; the bit manipulation is portable.
using Rng = std::mt19937_64;

// Uniform draw in [0, 1) with 53 random mantissa bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Index draw from non-negative weights summing to ~1; the tail index absorbs
// rounding so the draw always lands.
inline int sample_index(Rng& rng, std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("sample_index: empty weights");
  double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace multiunit
