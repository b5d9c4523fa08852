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
#include <utility>
#include <vector>

#include "majsep/linalg.hpp"

namespace majsep {

enum class Side { A, B };

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kEntropyCutoff = 1e-12;
inline constexpr std::size_t kDefaultDimCap = 4096;

/// A validated density matrix together with its subsystem structure.
///
/// `dims` lists the subsystem dimensions (their product is the matrix side)
/// and `split` cuts that list into an A prefix and a B suffix. A split of
/// 0 or dims.size() is allowed for single-party states such as marginals;
/// bipartite operations reject it with BadPartition.
///
/// Construction checks Hermiticity (1e-10), unit trace (1e-10) and positive
/// semidefiniteness (min eigenvalue >= -1e-9) and throws InvalidState naming
/// the violated condition. The spectrum computed for the PSD check is kept.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims,
                std::size_t split);
  /// Single-party state: dims = {matrix.dim()}, split = 1.
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t split() const noexcept { return split_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t dim_a() const noexcept;
  std::size_t dim_b() const noexcept;
  bool is_bipartite() const noexcept { return dim_a() > 1 && dim_b() > 1; }

  /// Eigenvalues, non-increasing, as computed during validation.
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
  std::size_t split_;
  std::vector<double> eigenvalues_;
};

/// Reduced state on the kept side. Output dims are the kept block with the
/// whole block on the A side of the split.
DensityMatrix partial_trace(const DensityMatrix& rho, Side keep);

/// Transposes the indices of one side only:
/// out((a,b),(a',b')) = rho((a,b'),(a',b)) for Side::B.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Side side);

/// Von Neumann entropy in bits; eigenvalues <= 1e-12 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

/// Tensor product state with rho's subsystems on A and sigma's on B.
DensityMatrix product_state(const DensityMatrix& rho, const DensityMatrix& sigma);

/// p |Psi><Psi| + (1-p) I/d^2 with |Psi> = sum_i |ii>/sqrt(d); dims (d, d).
DensityMatrix werner_state(std::size_t d, double p);

/// (1-eps) I/d^n + eps |cat><cat| with |cat> = sum_i |i...i>/sqrt(d) on n
/// qudits; the first n-1 qudits are A and the last is B. Throws TooLarge if
/// d^n exceeds `cap`.
DensityMatrix cat_mixed_state(std::size_t n, std::size_t d, double eps,
                              std::size_t cap = kDefaultDimCap);

/// p |00><00| + (1-p) |Psi+><Psi+| with |Psi+> = (|01> + |10>)/sqrt(2).
DensityMatrix example1_state(double p);

/// The globally and locally isospectral two-qubit pair (rho, sigma): rho is
/// NPT, sigma is diagonal and separable.
std::pair<DensityMatrix, DensityMatrix> isospectral_pair();

/// G G^dagger / tr(G G^dagger) for a dim x rank matrix G of standard complex
/// Gaussians drawn from a generator seeded with `seed`. Default dims are
/// the single-party {dim}.
DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank,
                                    std::uint64_t seed);
DensityMatrix random_density_matrix(std::vector<std::size_t> dims,
                                    std::size_t split, std::size_t rank,
                                    std::uint64_t seed);

/// sum_j p_j |psi_j><psi_j| (x) |phi_j><phi_j| with normalized complex
/// Gaussian vectors and p uniform on the simplex.
DensityMatrix random_separable_state(std::size_t dim_a, std::size_t dim_b,
                                     std::size_t terms, std::uint64_t seed);

/// Random pure state on dim_a x dim_b (normalized complex Gaussian vector).
DensityMatrix random_pure_state(std::size_t dim_a, std::size_t dim_b,
                                std::uint64_t seed);

/// Unitary from Gram-Schmidt orthonormalization of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// U rho U^dagger keeping rho's subsystem structure.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

}  // namespace majsep
