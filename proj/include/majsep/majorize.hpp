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
#include <optional>
#include <span>
#include <vector>

#include "majsep/linalg.hpp"

namespace majsep {

inline constexpr double kMajorizationTol = 1e-9;
inline constexpr double kSumTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-10;

/// Probability vector sorted non-increasing.
///
/// Entries must lie in [-1e-9, 1 + 1e-9] and sum to 1 within 1e-8; they are
/// clamped into [0, 1] but never renormalized. Violations throw BadParameter.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

  /// Copy extended with trailing zeros to length n (n >= size()).
  Spectrum padded(std::size_t n) const;

 private:
  std::vector<double> values_;
};

struct MajorizationVerdict {
  bool holds = false;
  /// gap[k-1] = sum_{i<=k} y_i - sum_{i<=k} x_i for k = 1..d.
  std::vector<double> prefix_gaps;
  /// Zero-based index k-1 of the first failing prefix, if any.
  std::optional<std::size_t> first_violation;

  double worst_gap() const;
};

/// Decides x ≺ y after padding the shorter vector with zeros. Throws
/// SumMismatch when the totals differ by more than 1e-8.
MajorizationVerdict is_majorized(const Spectrum& x, const Spectrum& y,
                                 double tol = kMajorizationTol);

/// Shannon entropy in bits, 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);
inline double shannon_entropy(const Spectrum& s) {
  return shannon_entropy(s.values());
}

/// Real square matrix, row-major.
struct RealMatrix {
  std::size_t dim = 0;
  std::vector<double> entries;

  double operator()(std::size_t r, std::size_t c) const {
    return entries[r * dim + c];
  }
};

bool is_doubly_stochastic(const RealMatrix& d, double tol = kUnitaryTol);

/// Entry-wise |u_jk|^2.
RealMatrix squared_modulus(const ComplexMatrix& u);

/// Real orthogonal u with x_j = sum_k |u_jk|^2 y_k, for x ≺ y.
///
/// y is walked toward x by T-transforms, each moving mass between one
/// coordinate with excess and the nearest later coordinate with a deficit
/// until one of the two hits its target exactly. Every T-transform
/// t I + (1-t) P is realized as a Givens rotation with cos^2 = t, and the
/// rotations are composed by left multiplication. The coordinates still
/// unmatched always carry a diagonal block of u diag(y) u^T, so the composed
/// rotation reproduces the T-transform chain on the diagonal. Throws
/// NotMajorized if x is not majorized by y within kMajorizationTol.
ComplexMatrix horn_unitary(const Spectrum& x, const Spectrum& y);

}  // namespace majsep
