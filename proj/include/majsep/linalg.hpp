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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace majsep {

using Complex = std::complex<double>;

inline constexpr double kDefaultEigTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;

/// Dense square complex matrix stored row-major. All entries are finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of side `dim`.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of `entries` (row-major, length dim*dim). Throws
  /// BadParameter on a length mismatch or a non-finite entry.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-wise literal, mainly for tests and fixed states.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double off_diagonal_norm() const;
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest absolute entry of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |A - A^dagger| entry.
double hermiticity_defect(const ComplexMatrix& a);

/// |v><v| for a column vector v.
ComplexMatrix outer(std::span<const Complex> v);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // non-increasing
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Kronecker product; entry (i1*db+i2, j1*db+j2) = a(i1,j1) * b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Sweeps every (p, q) pair, annihilating a(p,q) with a unitary 2x2
/// rotation, until the off-diagonal Frobenius norm drops to
/// `tol * ||A||_F`. Throws NotHermitian when max|A - A^dagger| > 1e-10 and
/// NoConvergence once `max_sweeps` sweeps have run without reaching the
/// tolerance. Eigenvalues come back non-increasing (stable with respect to
/// the diagonal order at convergence) with eigenvectors permuted alongside.
EigenDecomposition hermitian_eig(const ComplexMatrix& a,
                                 double tol = kDefaultEigTol,
                                 int max_sweeps = kMaxJacobiSweeps);

/// Eigenvalues only; same algorithm and errors as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tol = kDefaultEigTol,
                                          int max_sweeps = kMaxJacobiSweeps);

double min_eigenvalue(const ComplexMatrix& a, double tol = kDefaultEigTol);

}  // namespace majsep
