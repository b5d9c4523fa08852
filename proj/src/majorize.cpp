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

#include "majsep/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "majsep/error.hpp"

namespace majsep {

namespace {

constexpr double kEntryTol = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  double total = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < -kEntryTol || v > 1.0 + kEntryTol) {
      throw Error(ErrorCode::BadParameter,
                  "spectrum entry " + fmt(v) + " outside [0, 1]");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kSumTol) {
    throw Error(ErrorCode::BadParameter,
                "spectrum sums to " + fmt(total) + ", not 1");
  }
  for (double& v : values_) v = std::clamp(v, 0.0, 1.0);
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

Spectrum Spectrum::padded(std::size_t n) const {
  Spectrum out = *this;
  if (n > out.values_.size()) out.values_.resize(n, 0.0);
  return out;
}

double MajorizationVerdict::worst_gap() const {
  if (prefix_gaps.empty()) return 0.0;
  return *std::min_element(prefix_gaps.begin(), prefix_gaps.end());
}

MajorizationVerdict is_majorized(const Spectrum& x, const Spectrum& y,
                                 double tol) {
  const double sx = x.sum();
  const double sy = y.sum();
  if (std::abs(sx - sy) > kSumTol) {
    throw Error(ErrorCode::SumMismatch,
                "majorization needs equal totals, got " + fmt(sx) + " and " +
                    fmt(sy));
  }
  const std::size_t d = std::max(x.size(), y.size());
  const Spectrum xp = x.padded(d);
  const Spectrum yp = y.padded(d);

  MajorizationVerdict v;
  v.prefix_gaps.resize(d);
  double cx = 0.0;
  double cy = 0.0;
  v.holds = true;
  for (std::size_t k = 0; k < d; ++k) {
    cx += xp[k];
    cy += yp[k];
    const double gap = cy - cx;
    v.prefix_gaps[k] = gap;
    const bool ok = (k + 1 < d) ? gap >= -tol : std::abs(gap) <= tol;
    if (!ok && !v.first_violation) {
      v.first_violation = k;
      v.holds = false;
    }
  }
  return v;
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

bool is_doubly_stochastic(const RealMatrix& d, double tol) {
  const std::size_t n = d.dim;
  if (d.entries.size() != n * n) return false;
  for (double v : d.entries)
    if (!(v >= -tol)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += d(i, j);
      col += d(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

RealMatrix squared_modulus(const ComplexMatrix& u) {
  RealMatrix out{u.dim(), std::vector<double>(u.dim() * u.dim())};
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) out.entries[i * u.dim() + j] = std::norm(u(i, j));
  return out;
}

ComplexMatrix horn_unitary(const Spectrum& x, const Spectrum& y) {
  const auto verdict = is_majorized(x, y);
  if (!verdict.holds) {
    throw Error(ErrorCode::NotMajorized,
                "horn_unitary needs x majorized by y; prefix " +
                    std::to_string(*verdict.first_violation + 1) + " fails by " +
                    fmt(-verdict.prefix_gaps[*verdict.first_violation]));
  }
  const std::size_t d = std::max(x.size(), y.size());
  const Spectrum xs = x.padded(d);
  std::vector<double> target(xs.values().begin(), xs.values().end());
  const Spectrum ys = y.padded(d);
  std::vector<double> diag(ys.values().begin(), ys.values().end());

  // Row-major real orthogonal accumulator.
  std::vector<double> u(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) u[i * d + i] = 1.0;

  // Differences below this are treated as matched; well under the 1e-10
  // residual u has to meet.
  constexpr double kMatch = 1e-15;

  for (std::size_t step = 0; step < d; ++step) {
    // j: last coordinate still above its target; k: first later coordinate
    // below its target. Coordinates between them already match.
    std::size_t j = d;
    for (std::size_t i = d; i-- > 0;) {
      if (diag[i] - target[i] > kMatch) {
        j = i;
        break;
      }
    }
    if (j == d) break;
    std::size_t k = d;
    for (std::size_t i = j + 1; i < d; ++i) {
      if (target[i] - diag[i] > kMatch) {
        k = i;
        break;
      }
    }
    if (k == d) break;  // leftover excess is rounding noise

    const double spread = diag[j] - diag[k];
    const double excess = diag[j] - target[j];
    const double deficit = target[k] - diag[k];
    const double delta = std::min(excess, deficit);
    const double sin2 = std::clamp(delta / spread, 0.0, 1.0);
    const double c = std::sqrt(1.0 - sin2);
    const double s = std::sqrt(sin2);

    // G = [[c, s], [-s, c]] on rows (j, k), applied from the left.
    for (std::size_t col = 0; col < d; ++col) {
      const double uj = u[j * d + col];
      const double uk = u[k * d + col];
      u[j * d + col] = c * uj + s * uk;
      u[k * d + col] = -s * uj + c * uk;
    }
    const double dj = diag[j];
    const double dk = diag[k];
    diag[j] = (1.0 - sin2) * dj + sin2 * dk;
    diag[k] = sin2 * dj + (1.0 - sin2) * dk;
    if (excess <= deficit) {
      diag[j] = target[j];
    } else {
      diag[k] = target[k];
    }
  }

  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) out(i, c) = u[i * d + c];
  return out;
}

}  // namespace majsep
