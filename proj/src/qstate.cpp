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

#include "majsep/qstate.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "majsep/error.hpp"
#include "random.hpp"

namespace majsep {

namespace detail {

std::vector<Complex> Sampler::unit_vector(std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : v) {
      z = complex_gaussian();
      norm2 += std::norm(z);
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

std::vector<double> Sampler::simplex_point(std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - uniform());
    total += x;
  }
  if (total == 0.0) {
    for (auto& x : w) x = 1.0 / static_cast<double>(n);
    return w;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace detail

namespace {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t begin,
                    std::size_t end) {
  std::size_t p = 1;
  for (std::size_t i = begin; i < end; ++i) p *= dims[i];
  return p;
}

void require_bipartite(const DensityMatrix& rho, const char* op) {
  if (rho.split() == 0 || rho.split() >= rho.dims().size()) {
    throw Error(ErrorCode::BadPartition,
                std::string(op) + ": bipartition leaves one side empty (split " +
                    std::to_string(rho.split()) + " of " +
                    std::to_string(rho.dims().size()) + " subsystems)");
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadParameter,
                std::string(what) + " must lie in [0, 1], got " + fmt(p));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims,
                             std::size_t split)
    : matrix_(std::move(matrix)), dims_(std::move(dims)), split_(split) {
  if (matrix_.dim() == 0) {
    throw Error(ErrorCode::InvalidState, "density matrix is empty");
  }
  if (dims_.empty()) {
    throw Error(ErrorCode::InvalidState, "subsystem dimension list is empty");
  }
  for (auto d : dims_) {
    if (d == 0) {
      throw Error(ErrorCode::InvalidState, "subsystem dimension must be positive");
    }
  }
  if (product(dims_, 0, dims_.size()) != matrix_.dim()) {
    throw Error(ErrorCode::InvalidState,
                "product of subsystem dimensions " +
                    std::to_string(product(dims_, 0, dims_.size())) +
                    " does not match matrix side " + std::to_string(matrix_.dim()));
  }
  if (split_ > dims_.size()) {
    throw Error(ErrorCode::InvalidState, "split index beyond the subsystem list");
  }
  const double defect = hermiticity_defect(matrix_);
  if (!(defect <= kHermitianTol)) {
    throw Error(ErrorCode::InvalidState,
                "not Hermitian: max |rho - rho^dagger| = " + fmt(defect));
  }
  const Complex tr = matrix_.trace();
  if (!(std::abs(tr - Complex{1.0, 0.0}) <= kTraceTol)) {
    throw Error(ErrorCode::InvalidState,
                "trace is not one: tr(rho) = " + fmt(tr.real()) +
                    (tr.imag() != 0.0 ? " + " + fmt(tr.imag()) + "i" : ""));
  }
  eigenvalues_ = hermitian_eigenvalues(matrix_);
  if (eigenvalues_.back() < -kPsdTol) {
    throw Error(ErrorCode::InvalidState,
                "not positive semidefinite: min eigenvalue = " +
                    fmt(eigenvalues_.back()));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, {matrix.dim()}, 1) {}

std::size_t DensityMatrix::dim_a() const noexcept {
  return product(dims_, 0, split_);
}

std::size_t DensityMatrix::dim_b() const noexcept {
  return product(dims_, split_, dims_.size());
}

DensityMatrix partial_trace(const DensityMatrix& rho, Side keep) {
  require_bipartite(rho, "partial_trace");
  const std::size_t da = rho.dim_a();
  const std::size_t db = rho.dim_b();
  const auto& m = rho.matrix();
  const auto& dims = rho.dims();

  if (keep == Side::A) {
    ComplexMatrix out(da);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        Complex s{0.0, 0.0};
        for (std::size_t b = 0; b < db; ++b) s += m(a * db + b, a2 * db + b);
        out(a, a2) = s;
      }
    std::vector<std::size_t> kept(dims.begin(), dims.begin() + rho.split());
    const std::size_t n = kept.size();
    return DensityMatrix(std::move(out), std::move(kept), n);
  }

  ComplexMatrix out(db);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t b2 = 0; b2 < db; ++b2) {
      Complex s{0.0, 0.0};
      for (std::size_t a = 0; a < da; ++a) s += m(a * db + b, a * db + b2);
      out(b, b2) = s;
    }
  std::vector<std::size_t> kept(dims.begin() + rho.split(), dims.end());
  const std::size_t n = kept.size();
  return DensityMatrix(std::move(out), std::move(kept), n);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Side side) {
  require_bipartite(rho, "partial_transpose");
  const std::size_t da = rho.dim_a();
  const std::size_t db = rho.dim_b();
  const auto& m = rho.matrix();
  ComplexMatrix out(rho.dim());
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          const Complex v = side == Side::B ? m(a * db + b2, a2 * db + b)
                                            : m(a2 * db + b, a * db + b2);
          out(a * db + b, a2 * db + b2) = v;
        }
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double l : rho.eigenvalues())
    if (l > kEntropyCutoff) h -= l * std::log2(l);
  return h;
}

DensityMatrix product_state(const DensityMatrix& rho, const DensityMatrix& sigma) {
  std::vector<std::size_t> dims = rho.dims();
  dims.insert(dims.end(), sigma.dims().begin(), sigma.dims().end());
  return DensityMatrix(kron(rho.matrix(), sigma.matrix()), std::move(dims),
                       rho.dims().size());
}

DensityMatrix werner_state(std::size_t d, double p) {
  if (d < 2) {
    throw Error(ErrorCode::BadParameter, "Werner state needs d >= 2");
  }
  require_probability(p, "Werner weight p");
  const std::size_t n = d * d;
  ComplexMatrix m(n);
  const double mixed = (1.0 - p) / static_cast<double>(n);
  const double ent = p / static_cast<double>(d);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = mixed;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) += ent;
  return DensityMatrix(std::move(m), {d, d}, 1);
}

DensityMatrix cat_mixed_state(std::size_t n, std::size_t d, double eps,
                              std::size_t cap) {
  if (n < 2 || d < 2) {
    throw Error(ErrorCode::BadParameter, "cat state needs n >= 2 and d >= 2");
  }
  require_probability(eps, "cat weight eps");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > cap / d) {
      throw Error(ErrorCode::TooLarge,
                  "d^n exceeds the dimension cap " + std::to_string(cap));
    }
    dim *= d;
  }
  // |i...i> sits at index i * (1 + d + ... + d^(n-1)).
  const std::size_t stride = (dim - 1) / (d - 1);
  ComplexMatrix m(dim);
  const double mixed = (1.0 - eps) / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = mixed;
  const double cat = eps / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i * stride, j * stride) += cat;
  return DensityMatrix(std::move(m), std::vector<std::size_t>(n, d), n - 1);
}

DensityMatrix example1_state(double p) {
  require_probability(p, "Example state weight p");
  const double h = (1.0 - p) / 2.0;
  ComplexMatrix m{{p, 0, 0, 0}, {0, h, h, 0}, {0, h, h, 0}, {0, 0, 0, 0}};
  return DensityMatrix(std::move(m), {2, 2}, 1);
}

std::pair<DensityMatrix, DensityMatrix> isospectral_pair() {
  const double t = 1.0 / 3.0;
  ComplexMatrix rho{{t, 0, 0, 0}, {0, t, t, 0}, {0, t, t, 0}, {0, 0, 0, 0}};
  ComplexMatrix sigma{{t, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2.0 / 3.0}};
  return {DensityMatrix(std::move(rho), {2, 2}, 1),
          DensityMatrix(std::move(sigma), {2, 2}, 1)};
}

DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank,
                                    std::uint64_t seed) {
  return random_density_matrix({dim}, 1, rank, seed);
}

DensityMatrix random_density_matrix(std::vector<std::size_t> dims,
                                    std::size_t split, std::size_t rank,
                                    std::uint64_t seed) {
  const std::size_t dim = product(dims, 0, dims.size());
  if (dim == 0 || rank < 1 || rank > dim) {
    throw Error(ErrorCode::BadParameter,
                "random_density_matrix needs 1 <= rank <= dim (rank " +
                    std::to_string(rank) + ", dim " + std::to_string(dim) + ")");
  }
  detail::Sampler rng(seed);
  std::vector<Complex> g(dim * rank);
  for (auto& z : g) z = rng.complex_gaussian();

  ComplexMatrix m(dim);
  double trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < rank; ++k) s += g[i * rank + k] * std::conj(g[j * rank + k]);
      m(i, j) = s;
    }
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = m(i, i).real();
    trace += m(i, i).real();
  }
  m *= 1.0 / trace;
  return DensityMatrix(std::move(m), std::move(dims), split);
}

DensityMatrix random_separable_state(std::size_t dim_a, std::size_t dim_b,
                                     std::size_t terms, std::uint64_t seed) {
  if (terms < 1 || dim_a < 1 || dim_b < 1) {
    throw Error(ErrorCode::BadParameter,
                "random_separable_state needs positive dimensions and terms");
  }
  detail::Sampler rng(seed);
  const auto weights = rng.simplex_point(terms);
  ComplexMatrix m(dim_a * dim_b);
  for (std::size_t j = 0; j < terms; ++j) {
    const auto psi = rng.unit_vector(dim_a);
    const auto phi = rng.unit_vector(dim_b);
    m += kron(outer(psi), outer(phi)) * Complex{weights[j], 0.0};
  }
  return DensityMatrix(std::move(m), {dim_a, dim_b}, 1);
}

DensityMatrix random_pure_state(std::size_t dim_a, std::size_t dim_b,
                                std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1) {
    throw Error(ErrorCode::BadParameter, "random_pure_state needs positive dimensions");
  }
  detail::Sampler rng(seed);
  const auto v = rng.unit_vector(dim_a * dim_b);
  return DensityMatrix(outer(v), {dim_a, dim_b}, 1);
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  detail::Sampler rng(seed);
  ComplexMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    while (norm2 < 1e-6) {
      for (auto& z : v) z = rng.complex_gaussian();
      // Two Gram-Schmidt passes against the columns already placed.
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < col; ++k) {
          Complex dot{0.0, 0.0};
          for (std::size_t i = 0; i < dim; ++i) dot += std::conj(u(i, k)) * v[i];
          for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * u(i, k);
        }
      norm2 = 0.0;
      for (const auto& z : v) norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) u(i, col) = v[i] * inv;
  }
  return u;
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  // Restore exact Hermitian symmetry lost to rounding.
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(m), rho.dims(), rho.split());
}

}  // namespace majsep
