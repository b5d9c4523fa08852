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

#include "majsep/majorize.hpp"
#include "majsep/qstate.hpp"

namespace majsep {

inline constexpr double kDefaultCriteriaTol = 1e-9;
inline constexpr double kEntropySlack = 1e-9;

/// Necessary conditions only: a passing state is not certified separable.
enum class Verdict { ProvenInseparable, ConsistentWithSeparability };

const char* to_string(Verdict v) noexcept;

struct MajorizationPair {
  MajorizationVerdict a;  // λ(ρ_AB) ≺ λ(ρ_A)
  MajorizationVerdict b;  // λ(ρ_AB) ≺ λ(ρ_B)
};

struct EntropyResult {
  bool ok = false;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double entropy_ab = 0.0;
};

struct PptResult {
  bool ok = false;
  double min_eigenvalue = 0.0;
};

struct SeparabilityReport {
  Spectrum global_spectrum;
  Spectrum spectrum_a;
  Spectrum spectrum_b;
  MajorizationVerdict majorization_a;
  MajorizationVerdict majorization_b;
  EntropyResult entropy;
  PptResult ppt;
  Verdict verdict = Verdict::ProvenInseparable;
};

MajorizationPair majorization_criterion(const DensityMatrix& rho,
                                        double tol = kDefaultCriteriaTol);

/// S(A) <= S(A,B) and S(B) <= S(A,B), each with 1e-9 slack.
EntropyResult entropy_criterion(const DensityMatrix& rho);

/// Minimum eigenvalue of the partial transpose on B against -tol.
PptResult ppt_criterion(const DensityMatrix& rho,
                        double tol = kDefaultCriteriaTol);

SeparabilityReport analyze(const DensityMatrix& rho,
                           double tol = kDefaultCriteriaTol);

/// Bisects the last p in [lo, hi] for which `passes` holds, assuming it
/// holds at lo and fails at hi. Stops when the bracket is below `width`.
template <class Pred>
double bisect_boundary(Pred&& passes, double lo, double hi,
                       double width = 1e-12) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Numerical boundary of the majorization criterion on werner_state(d, .).
double bisect_werner_majorization(std::size_t d,
                                  double tol = kDefaultCriteriaTol);
/// Numerical boundary of the PPT criterion on werner_state(d, .).
double bisect_werner_ppt(std::size_t d, double tol = kDefaultCriteriaTol);
/// Numerical boundary of the entropy criterion on the two-qubit Werner line.
double bisect_werner_entropy();
/// Numerical boundary of the majorization criterion on cat_mixed_state.
double bisect_cat_majorization(std::size_t n, std::size_t d,
                               double tol = kDefaultCriteriaTol);

/// 1/(d+1). With `self_check`, the bisected boundary must agree within
/// 1e-6 or SelfCheckFailed is thrown.
double werner_majorization_threshold(std::size_t d, bool self_check = true);

/// 1/(1 + d^(n-1)), self-checked the same way.
double cat_violation_threshold(std::size_t n, std::size_t d,
                               bool self_check = true);

}  // namespace majsep
