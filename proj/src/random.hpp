// Copyright 2026 The majsep Authors
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

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "majsep/linalg.hpp"

namespace majsep::detail {

/// All sampling goes through one explicitly seeded 64-bit Mersenne twister
/// per call; nothing is global.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Complex complex_gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re, im};
  }

  std::vector<Complex> unit_vector(std::size_t dim);

  /// Uniform point on the probability simplex via normalized exponentials.
  std::vector<double> simplex_point(std::size_t n);

  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace majsep::detail
