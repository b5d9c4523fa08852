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

#include "majsep/criteria.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "majsep/error.hpp"

namespace majsep {

namespace {

constexpr double kThresholdAgreement = 1e-6;

Spectrum global_spectrum(const DensityMatrix& rho) {
  return Spectrum(rho.eigenvalues());
}

void self_check(double analytic, double numeric, const std::string& what) {
  if (!(std::abs(analytic - numeric) <= kThresholdAgreement)) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": bisected boundary " << numeric
       << " disagrees with closed form " << analytic;
    throw Error(ErrorCode::SelfCheckFailed, os.str());
  }
}

bool both_hold(const MajorizationPair& m) { return m.a.holds && m.b.holds; }

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ProvenInseparable: return "ProvenInseparable";
    case Verdict::ConsistentWithSeparability: return "ConsistentWithSeparability";
  }
  return "Unknown";
}

MajorizationPair majorization_criterion(const DensityMatrix& rho, double tol) {
  const Spectrum global = global_spectrum(rho);
  const Spectrum sa(partial_trace(rho, Side::A).eigenvalues());
  const Spectrum sb(partial_trace(rho, Side::B).eigenvalues());
  return {is_majorized(global, sa, tol), is_majorized(global, sb, tol)};
}

EntropyResult entropy_criterion(const DensityMatrix& rho) {
  EntropyResult r;
  r.entropy_ab = von_neumann_entropy(rho);
  r.entropy_a = von_neumann_entropy(partial_trace(rho, Side::A));
  r.entropy_b = von_neumann_entropy(partial_trace(rho, Side::B));
  r.ok = r.entropy_a <= r.entropy_ab + kEntropySlack &&
         r.entropy_b <= r.entropy_ab + kEntropySlack;
  return r;
}

PptResult ppt_criterion(const DensityMatrix& rho, double tol) {
  PptResult r;
  r.min_eigenvalue = min_eigenvalue(partial_transpose(rho, Side::B));
  r.ok = r.min_eigenvalue >= -tol;
  return r;
}

SeparabilityReport analyze(const DensityMatrix& rho, double tol) {
  const DensityMatrix rho_a = partial_trace(rho, Side::A);
  const DensityMatrix rho_b = partial_trace(rho, Side::B);

  SeparabilityReport rep;
  rep.global_spectrum = global_spectrum(rho);
  rep.spectrum_a = Spectrum(rho_a.eigenvalues());
  rep.spectrum_b = Spectrum(rho_b.eigenvalues());
  rep.majorization_a = is_majorized(rep.global_spectrum, rep.spectrum_a, tol);
  rep.majorization_b = is_majorized(rep.global_spectrum, rep.spectrum_b, tol);

  rep.entropy.entropy_ab = von_neumann_entropy(rho);
  rep.entropy.entropy_a = von_neumann_entropy(rho_a);
  rep.entropy.entropy_b = von_neumann_entropy(rho_b);
  rep.entropy.ok = rep.entropy.entropy_a <= rep.entropy.entropy_ab + kEntropySlack &&
                   rep.entropy.entropy_b <= rep.entropy.entropy_ab + kEntropySlack;

  rep.ppt = ppt_criterion(rho, tol);

  const bool consistent = rep.majorization_a.holds && rep.majorization_b.holds &&
                          rep.entropy.ok && rep.ppt.ok;
  rep.verdict = consistent ? Verdict::ConsistentWithSeparability
                           : Verdict::ProvenInseparable;
  return rep;
}

double bisect_werner_majorization(std::size_t d, double tol) {
  return bisect_boundary(
      [&](double p) { return both_hold(majorization_criterion(werner_state(d, p), tol)); },
      0.0, 1.0);
}

double bisect_werner_ppt(std::size_t d, double tol) {
  return bisect_boundary(
      [&](double p) { return ppt_criterion(werner_state(d, p), tol).ok; }, 0.0, 1.0);
}

double bisect_werner_entropy() {
  return bisect_boundary(
      [](double p) { return entropy_criterion(werner_state(2, p)).ok; }, 0.0, 1.0);
}

double bisect_cat_majorization(std::size_t n, std::size_t d, double tol) {
  return bisect_boundary(
      [&](double eps) {
        return both_hold(majorization_criterion(cat_mixed_state(n, d, eps), tol));
      },
      0.0, 1.0);
}

double werner_majorization_threshold(std::size_t d, bool check) {
  if (d < 2) {
    throw Error(ErrorCode::BadParameter, "Werner threshold needs d >= 2");
  }
  const double p = 1.0 / static_cast<double>(d + 1);
  if (check) self_check(p, bisect_werner_majorization(d), "Werner threshold");
  return p;
}

double cat_violation_threshold(std::size_t n, std::size_t d, bool check) {
  if (n < 2 || d < 2) {
    throw Error(ErrorCode::BadParameter, "cat threshold needs n >= 2 and d >= 2");
  }
  const double eps = 1.0 / (1.0 + std::pow(static_cast<double>(d),
                                           static_cast<double>(n - 1)));
  if (check) self_check(eps, bisect_cat_majorization(n, d), "cat threshold");
  return eps;
}

}  // namespace majsep
