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

#include "majsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majsep/error.hpp"

namespace majsep {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::BadParameter,
                "matrix of side " + std::to_string(dim_) + " needs " +
                    std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  if (!is_finite()) {
    throw Error(ErrorCode::BadParameter, "matrix has a non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorCode::BadParameter, "matrix literal is not square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!is_finite()) {
    throw Error(ErrorCode::BadParameter, "matrix has a non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::BadParameter, "matrix sum dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::BadParameter, "matrix difference dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::BadParameter, "matrix product dimension mismatch");
  }
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::BadParameter, "matrix comparison dimension mismatch");
  }
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

ComplexMatrix outer(std::span<const Complex> v) {
  ComplexMatrix out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < db; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2)
          out(i1 * db + i2, j1 * db + j2) = aij * b(i2, j2);
    }
  return out;
}

namespace {

// Runs the Jacobi sweeps in place. On return `work` is diagonal to
// tolerance and, when `vectors` is non-null, A = V diag(work) V^dagger.
void jacobi_diagonalize(ComplexMatrix& work, ComplexMatrix* vectors,
                        double tol, int max_sweeps) {
  if (!(tol >= 0.0) || max_sweeps < 1) {
    throw Error(ErrorCode::BadParameter,
                "eigensolver needs tol >= 0 and at least one sweep");
  }
  const std::size_t n = work.dim();
  const double scale = work.frobenius_norm();
  const double target = tol * scale;
  if (scale == 0.0 || n < 2) return;

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (work.off_diagonal_norm() <= target) return;
    if (sweep == max_sweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = work(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Phase e^{-i phi} on q makes the pivot real, then a real rotation
        // (tan convention with t the smaller root) zeroes it.
        const Complex phase = std::conj(apq) / mag;
        const double app = work(p, p).real();
        const double aqq = work(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J restricted to (p, q): [[c, s], [-s*phase, c*phase]].
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase;
        const Complex jqq = c * phase;

        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = work(i, p);
          const Complex aiq = work(i, q);
          work(i, p) = aip * jpp + aiq * jqp;
          work(i, q) = aip * jpq + aiq * jqq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex api = work(p, i);
          const Complex aqi = work(q, i);
          work(p, i) = std::conj(jpp) * api + std::conj(jqp) * aqi;
          work(q, i) = std::conj(jpq) * api + std::conj(jqq) * aqi;
        }
        work(p, q) = 0.0;
        work(q, p) = 0.0;
        work(p, p) = work(p, p).real();
        work(q, q) = work(q, q).real();

        if (vectors != nullptr) {
          ComplexMatrix& v = *vectors;
          for (std::size_t i = 0; i < n; ++i) {
            const Complex vip = v(i, p);
            const Complex viq = v(i, q);
            v(i, p) = vip * jpp + viq * jqp;
            v(i, q) = vip * jpq + viq * jqq;
          }
        }
      }
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "Jacobi eigensolver did not converge in " +
                  std::to_string(max_sweeps) + " sweeps");
}

void check_hermitian(const ComplexMatrix& a) {
  const double defect = hermiticity_defect(a);
  if (!(defect <= kHermitianTol)) {
    throw Error(ErrorCode::NotHermitian,
                "matrix is not Hermitian: max |A - A^dagger| = " +
                    std::to_string(defect));
  }
}

std::vector<std::size_t> descending_order(const ComplexMatrix& diag) {
  std::vector<std::size_t> order(diag.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return diag(l, l).real() > diag(r, r).real();
  });
  return order;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol,
                                 int max_sweeps) {
  check_hermitian(a);
  ComplexMatrix work = a;
  ComplexMatrix vectors = ComplexMatrix::identity(a.dim());
  jacobi_diagonalize(work, &vectors, tol, max_sweeps);

  const auto order = descending_order(work);
  EigenDecomposition out;
  out.eigenvalues.reserve(a.dim());
  out.eigenvectors = ComplexMatrix(a.dim());
  for (std::size_t j = 0; j < order.size(); ++j) {
    out.eigenvalues.push_back(work(order[j], order[j]).real());
    for (std::size_t i = 0; i < a.dim(); ++i)
      out.eigenvectors(i, j) = vectors(i, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol,
                                          int max_sweeps) {
  check_hermitian(a);
  ComplexMatrix work = a;
  jacobi_diagonalize(work, nullptr, tol, max_sweeps);
  std::vector<double> values(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) values[i] = work(i, i).real();
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double min_eigenvalue(const ComplexMatrix& a, double tol) {
  const auto values = hermitian_eigenvalues(a, tol);
  if (values.empty()) {
    throw Error(ErrorCode::BadParameter, "min_eigenvalue of an empty matrix");
  }
  return values.back();
}

}  // namespace majsep
