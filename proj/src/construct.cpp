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

#include "majsep/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "majsep/criteria.hpp"
#include "majsep/error.hpp"

namespace majsep {

SeparableConstruction theorem2_construct(const Spectrum& r, const Spectrum& s) {
  if (std::none_of(r.values().begin(), r.values().end(),
                   [](double v) { return v > kZeroWeight; })) {
    throw Error(ErrorCode::DegenerateInput, "target global spectrum has no weight");
  }
  const ComplexMatrix u = horn_unitary(r, s);
  const std::size_t dim_a = s.size();
  const std::size_t dim_b = r.size();

  std::vector<ProductTerm> terms;
  ComplexMatrix m(dim_a * dim_b);
  for (std::size_t j = 0; j < dim_b; ++j) {
    const double rj = r[j];
    if (rj <= kZeroWeight) continue;
    ProductTerm term;
    term.weight = rj;
    term.b_index = j;
    term.a_vector.resize(dim_a);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim_a; ++k) {
      term.a_vector[k] = u(j, k) * std::sqrt(s[k] / rj);
      norm2 += std::norm(term.a_vector[k]);
    }
    // |u_j|^2 . s = r_j up to the rotation residual; fold it back into the
    // vector so each term is an exact pure product.
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : term.a_vector) z *= inv;

    for (std::size_t k = 0; k < dim_a; ++k)
      for (std::size_t k2 = 0; k2 < dim_a; ++k2)
        m(k * dim_b + j, k2 * dim_b + j) +=
            rj * term.a_vector[k] * std::conj(term.a_vector[k2]);
    terms.push_back(std::move(term));
  }

  DensityMatrix state(std::move(m), {dim_a, dim_b}, 1);
  return {std::move(state), std::move(terms), u};
}

TwoTermDecomposition::TwoTermDecomposition(double q, double alpha, double beta)
    : q_(q), alpha_(alpha), beta_(beta) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::BadParameter, "two-term weight q must lie in [0, 1]");
  }
  if (!(alpha >= 0.0 && alpha <= half_pi && beta >= 0.0 && beta <= half_pi)) {
    throw Error(ErrorCode::BadParameter,
                "overlap angles must lie in [0, pi/2]");
  }
  phi_ = std::acos(std::clamp(std::cos(alpha) * std::cos(beta), -1.0, 1.0));
}

Spectrum TwoTermDecomposition::global_spectrum() const {
  return theorem3_global_spectrum(q_, phi_);
}

Spectrum TwoTermDecomposition::spectrum_a() const {
  return theorem3_global_spectrum(q_, alpha_);
}

Spectrum TwoTermDecomposition::spectrum_b() const {
  return theorem3_global_spectrum(q_, beta_);
}

Spectrum theorem3_global_spectrum(double q, double phi) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::BadParameter, "two-term weight q must lie in [0, 1]");
  }
  const double sin_phi = std::sin(phi);
  const double g = std::sqrt(std::max(0.0, 1.0 - 4.0 * q * (1.0 - q) * sin_phi * sin_phi));
  return Spectrum({(1.0 + g) / 2.0, (1.0 - g) / 2.0});
}

double theorem3_required_product(double p) {
  return (1.0 + p) * (1.0 + p) / 8.0;
}

namespace {

double discriminant(double p) { return 1.0 - 4.0 * theorem3_required_product(p); }

}  // namespace

std::optional<std::pair<double, double>> theorem3_feasibility(double p) {
  if (!(p >= 0.5 && p < 1.0)) {
    throw Error(ErrorCode::BadParameter,
                "theorem3_feasibility needs p in [1/2, 1)");
  }
  const double disc = discriminant(p);
  if (disc < -kDiscriminantTol) return std::nullopt;
  if (disc <= kDiscriminantTol) return std::pair{0.5, 0.5};
  const double root = std::sqrt(disc);
  return std::pair{(1.0 - root) / 2.0, (1.0 + root) / 2.0};
}

double theorem3_infeasibility_onset() {
  return bisect_boundary([](double p) { return discriminant(p) >= 0.0; }, 0.0, 1.0,
                         1e-15);
}

}  // namespace majsep
