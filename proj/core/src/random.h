// Copyright 2026 The viewdiv Authors.
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

// Random draws built only on std::mt19937_64, whose output sequence is fixed
// by the standard. The <random> distributions are implementation-defined, so
// they are avoided to keep generated datasets identical across toolchains.

#ifndef VIEWDIV_SRC_RANDOM_H_
#define VIEWDIV_SRC_RANDOM_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>

namespace viewdiv::internal {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Poisson(mean). Knuth's product method on chunks of at most 30, using
  // that a sum of independent Poisson variables is Poisson.
  std::size_t Poisson(double mean) {
    std::size_t total = 0;
    while (mean > 0.0) {
      const double chunk = mean > 30.0 ? 30.0 : mean;
      mean -= chunk;
      const double limit = std::exp(-chunk);
      double product = Uniform();
      while (product > limit) {
        ++total;
        product *= Uniform();
      }
    }
    return total;
  }

  // Index drawn proportionally to non-negative `weights` (not all zero).
  std::size_t Weighted(std::span<const double> weights) {
    double sum = 0.0;
    for (double w : weights) sum += w;
    double target = Uniform() * sum;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last = i;
      if (target < weights[i]) return i;
      target -= weights[i];
    }
    return last;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace viewdiv::internal

#endif  // VIEWDIV_SRC_RANDOM_H_
