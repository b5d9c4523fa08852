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
#include <utility>
#include <vector>

#include "majsep/majorize.hpp"
#include "majsep/qstate.hpp"

namespace majsep {

inline constexpr double kZeroWeight = 1e-12;
inline constexpr double kDiscriminantTol = 1e-12;

/// One term r_j |psi_j><psi_j| (x) |j><j| of a constructed separable state.
struct ProductTerm {
  double weight = 0.0;
  std::vector<Complex> a_vector;  // unit vector on A
  std::size_t b_index = 0;        // computational basis state on B
};

struct SeparableConstruction {
  DensityMatrix state;
  std::vector<ProductTerm> terms;
  ComplexMatrix horn;  // u with r_j = sum_k |u_jk|^2 s_k
};

/// Separable state whose global spectrum is r and whose A marginal has
/// spectrum s, given r ≺ s.
///
/// The A dimension is len(s) and the B dimension is len(r); the Horn
/// rotation acts on both padded to the common length. Terms with
/// r_j <= 1e-12 are dropped. Throws NotMajorized or DegenerateInput.
SeparableConstruction theorem2_construct(const Spectrum& r, const Spectrum& s);

/// Two-term decomposition q |a1 b1><a1 b1| + (1-q) |a2 b2><a2 b2| described
/// by the overlaps |<a1|a2>| = cos(alpha), |<b1|b2>| = cos(beta) and the
/// product overlap cos(phi) = cos(alpha) cos(beta).
class TwoTermDecomposition {
 public:
  TwoTermDecomposition(double q, double alpha, double beta);

  double q() const noexcept { return q_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double phi() const noexcept { return phi_; }

  Spectrum global_spectrum() const;
  Spectrum spectrum_a() const;
  Spectrum spectrum_b() const;

 private:
  double q_;
  double alpha_;
  double beta_;
  double phi_;
};

/// ((1+g)/2, (1-g)/2), g = sqrt(1 - 4 q (1-q) sin^2 phi).
Spectrum theorem3_global_spectrum(double q, double phi);

/// q(1-q) a two-term isospectral decomposition of example1_state(p) needs.
double theorem3_required_product(double p);

/// Roots of q(1-q) = (1+p)^2/8 for p in [1/2, 1), or nullopt when none exist.
std::optional<std::pair<double, double>> theorem3_feasibility(double p);

/// Smallest p in [0, 1] at which q(1-q) = (1+p)^2/8 stops having real roots,
/// found by bisection on the discriminant.
double theorem3_infeasibility_onset();

}  // namespace majsep
