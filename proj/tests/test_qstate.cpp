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

#include <doctest.h>

#include <cmath>
#include <random>

#include "majsep/criteria.hpp"
#include "majsep/error.hpp"
#include "majsep/majorize.hpp"
#include "majsep/qstate.hpp"
#include "test_support.hpp"

using namespace majsep;

namespace {

ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix e(n);
  e(i, j) = 1.0;
  return e;
}

// (tr_B rho)_{ji} = tr(rho (E_ij (x) I)), evaluated with kron and products.
ComplexMatrix trace_out_b_oracle(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      out(j, i) = (rho * kron(unit(da, i, j), ComplexMatrix::identity(db))).trace();
  return out;
}

ComplexMatrix trace_out_a_oracle(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      out(j, i) = (rho * kron(ComplexMatrix::identity(da), unit(db, i, j))).trace();
  return out;
}

// sum_kl (I (x) E_kl) rho (I (x) E_kl) maps X (x) Y to X (x) Y^T.
ComplexMatrix transpose_b_oracle(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(da * db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l) {
      const auto e = kron(ComplexMatrix::identity(da), unit(db, k, l));
      out += e * rho * e;
    }
  return out;
}

DensityMatrix bell_state() {
  const double h = 0.5;
  return DensityMatrix(ComplexMatrix{{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}},
                       {2, 2}, 1);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadParameter;
}

}  // namespace

TEST_SUITE("qstate") {

TEST_CASE("density matrix validation names the violated invariant") {
  auto message = [](auto&& f) -> std::string {
    try {
      f();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidState);
      return e.what();
    }
    return "";
  };
  CHECK(message([] { DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}); })
            .find("Hermitian") != std::string::npos);
  CHECK(message([] { DensityMatrix(ComplexMatrix{{0.5, 0}, {0, 0.6}}); })
            .find("trace") != std::string::npos);
  CHECK(message([] { DensityMatrix(ComplexMatrix{{1.5, 0}, {0, -0.5}}); })
            .find("positive semidefinite") != std::string::npos);
  CHECK(message([] { DensityMatrix(ComplexMatrix::identity(4) * 0.25, {2, 3}, 1); })
            .find("product of subsystem") != std::string::npos);
  // PSD slack of 1e-9.
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix{{1.0 + 5e-10, 0}, {0, -5e-10}}));
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const auto a = partial_trace(bell_state(), Side::A);
  CHECK(max_abs_diff(a.matrix(), ComplexMatrix::identity(2) * 0.5) <= 1e-15);
  CHECK(a.dims() == std::vector<std::size_t>{2});
  CHECK(von_neumann_entropy(a) == doctest::Approx(1.0));
}

TEST_CASE("partial trace of a product returns the factor") {
  const auto rho = random_density_matrix(3, 2, 1);
  const auto sigma = random_density_matrix(2, 2, 2);
  const auto prod = product_state(rho, sigma);
  CHECK(max_abs_diff(partial_trace(prod, Side::A).matrix(), rho.matrix()) <= 1e-14);
  CHECK(max_abs_diff(partial_trace(prod, Side::B).matrix(), sigma.matrix()) <= 1e-14);
}

TEST_CASE("partial trace of the NPT isospectral member") {
  const auto [rho, sigma] = isospectral_pair();
  const double d[] = {2.0 / 3.0, 1.0 / 3.0};
  CHECK(max_abs_diff(partial_trace(rho, Side::A).matrix(), ComplexMatrix::diagonal(d)) <= 1e-15);
}

TEST_CASE("partial trace keeps multi-qudit structure") {
  const auto cat = cat_mixed_state(3, 2, 0.3);
  const auto a = partial_trace(cat, Side::A);
  CHECK(a.dims() == std::vector<std::size_t>{2, 2});
  CHECK(a.split() == 2);
  const auto b = partial_trace(cat, Side::B);
  CHECK(max_abs_diff(b.matrix(), ComplexMatrix::identity(2) * 0.5) <= 1e-15);
}

TEST_CASE("partial trace agrees with the kron oracle on random states") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t da = 2 + seed % 3;
    const std::size_t db = 2 + (seed / 3) % 3;
    const auto rho = random_density_matrix({da, db}, 1, 1 + seed % (da * db), seed);
    const auto a = partial_trace(rho, Side::A);
    const auto b = partial_trace(rho, Side::B);
    CHECK(max_abs_diff(a.matrix(), trace_out_b_oracle(rho.matrix(), da, db)) <= 1e-13);
    CHECK(max_abs_diff(b.matrix(), trace_out_a_oracle(rho.matrix(), da, db)) <= 1e-13);
    CHECK(std::abs(a.matrix().trace() - 1.0) <= 1e-10);
    CHECK(hermiticity_defect(a.matrix()) <= 1e-12);
    CHECK(a.eigenvalues().back() >= -1e-9);
    CHECK(b.eigenvalues().back() >= -1e-9);
  }
}

TEST_CASE("partial transpose: products, involution, and oracle") {
  const auto rho = random_density_matrix(2, 2, 4);
  const auto sigma = random_density_matrix(3, 3, 5);
  const auto prod = product_state(rho, sigma);
  const auto pt = partial_transpose(prod, Side::B);
  CHECK(max_abs_diff(pt, kron(rho.matrix(), sigma.matrix().transpose())) <= 1e-15);
  CHECK(min_eigenvalue(pt) >= -1e-12);

  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const std::size_t da = 2 + seed % 2;
    const std::size_t db = 2 + (seed / 2) % 3;
    const auto r = random_density_matrix({da, db}, 1, 2, seed);
    const auto tb = partial_transpose(r, Side::B);
    CHECK(max_abs_diff(tb, transpose_b_oracle(r.matrix(), da, db)) <= 1e-14);
    CHECK(std::abs(tb.trace() - 1.0) <= 1e-10);
    CHECK(hermiticity_defect(tb) <= 1e-14);
    // Involution; the oracle needs no positivity so it can act on tb.
    const auto twice = transpose_b_oracle(tb, da, db);
    CHECK(max_abs_diff(twice, r.matrix()) == 0.0);
    // rho^{T_A} = (rho^{T_B})^T, so both sides share a spectrum.
    const auto ta = partial_transpose(r, Side::A);
    CHECK(max_abs_diff(ta, tb.transpose()) == 0.0);
    const auto la = hermitian_eigenvalues(ta);
    const auto lb = hermitian_eigenvalues(tb);
    for (std::size_t i = 0; i < la.size(); ++i) CHECK(std::abs(la[i] - lb[i]) <= 1e-10);
  }
}

TEST_CASE("partial transpose of a valid state applied twice through the API") {
  // Werner states stay PSD under partial transpose for p <= 1/3.
  const auto w = werner_state(3, 0.2);
  const DensityMatrix pt(partial_transpose(w, Side::B), w.dims(), w.split());
  CHECK(max_abs_diff(partial_transpose(pt, Side::B), w.matrix()) == 0.0);
}

TEST_CASE("partial transpose of the NPT isospectral member") {
  const auto [rho, sigma] = isospectral_pair();
  CHECK(std::abs(min_eigenvalue(partial_transpose(rho, Side::B)) - (1 - std::sqrt(5.0)) / 6) <= 1e-12);
  CHECK(min_eigenvalue(partial_transpose(sigma, Side::B)) >= -1e-15);
}

TEST_CASE("bipartite operations reject a one-sided split") {
  const DensityMatrix single(ComplexMatrix::identity(4) * 0.25);
  CHECK(code_of([&] { partial_trace(single, Side::A); }) == ErrorCode::BadPartition);
  CHECK(code_of([&] { partial_transpose(single, Side::B); }) == ErrorCode::BadPartition);
  const DensityMatrix empty_a(ComplexMatrix::identity(4) * 0.25, {2, 2}, 0);
  CHECK(code_of([&] { partial_trace(empty_a, Side::B); }) == ErrorCode::BadPartition);
}

TEST_CASE("von Neumann entropy examples") {
  CHECK(von_neumann_entropy(random_density_matrix(5, 1, 9)) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::identity(2) * 0.5)) == doctest::Approx(1.0));
  for (double p : {0.0, 0.2, 0.5, 0.747, 0.9}) {
    const double mixed = (1 - p) / 4;
    const double h = majsep::testing::binary_entropy_terms({(1 + 3 * p) / 4, mixed, mixed, mixed});
    CHECK(von_neumann_entropy(werner_state(2, p)) == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("entropy is additive on products") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_density_matrix(2 + seed % 3, 1 + seed % 2, seed);
    const auto sigma = random_density_matrix(3, 1 + seed % 3, seed + 1000);
    CHECK(std::abs(von_neumann_entropy(product_state(rho, sigma)) -
                   von_neumann_entropy(rho) - von_neumann_entropy(sigma)) <= 1e-8);
  }
}

TEST_CASE("Werner state family") {
  CHECK(max_abs_diff(werner_state(2, 0).matrix(), ComplexMatrix::identity(4) * 0.25) == 0.0);
  const auto pure = werner_state(2, 1);
  CHECK(pure.eigenvalues()[0] == doctest::Approx(1.0));
  CHECK(std::abs(pure.eigenvalues()[1]) <= 1e-12);
  CHECK(max_abs_diff(pure.matrix(), bell_state().matrix()) <= 1e-15);

  const auto half = werner_state(2, 0.5);
  const double spec[] = {5.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8};
  for (int i = 0; i < 4; ++i) CHECK(half.eigenvalues()[i] == doctest::Approx(spec[i]));
  CHECK(max_abs_diff(partial_trace(half, Side::A).matrix(), ComplexMatrix::identity(2) * 0.5) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(half, Side::B).matrix(), ComplexMatrix::identity(2) * 0.5) <= 1e-15);

  for (std::size_t d : {3u, 4u, 5u}) {
    const double p = 0.37;
    const auto w = werner_state(d, p);
    const double n = static_cast<double>(d * d);
    CHECK(w.eigenvalues()[0] == doctest::Approx((1 + (n - 1) * p) / n));
    for (std::size_t i = 1; i < d * d; ++i) CHECK(w.eigenvalues()[i] == doctest::Approx((1 - p) / n));
  }
  CHECK(code_of([] { werner_state(2, 1.01); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { werner_state(2, -0.1); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { werner_state(1, 0.5); }) == ErrorCode::BadParameter);
}

TEST_CASE("cat mixed state family") {
  const auto mixed = cat_mixed_state(3, 2, 0.0);
  CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::identity(8) * 0.125) == 0.0);
  CHECK(mixed.dims() == std::vector<std::size_t>{2, 2, 2});
  CHECK(mixed.split() == 2);
  CHECK(max_abs_diff(cat_mixed_state(2, 2, 1.0).matrix(), bell_state().matrix()) <= 1e-15);
  CHECK(cat_mixed_state(2, 3, 0.5).dim() == 9);
  CHECK(code_of([] { cat_mixed_state(13, 2, 0.1); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { cat_mixed_state(3, 3, 0.1, 26); }) == ErrorCode::TooLarge);
  CHECK_NOTHROW(cat_mixed_state(3, 3, 0.1, 27));
}

TEST_CASE("p|00> + Psi+ mixture spectra") {
  for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    const auto rho = example1_state(p);
    CHECK(rho.eigenvalues()[0] == doctest::Approx(std::max(p, 1 - p)));
    CHECK(rho.eigenvalues()[1] == doctest::Approx(std::min(p, 1 - p)).epsilon(1e-9));
    CHECK(std::abs(rho.eigenvalues()[2]) <= 1e-12);
    const double d[] = {(1 + p) / 2, (1 - p) / 2};
    CHECK(max_abs_diff(partial_trace(rho, Side::A).matrix(), ComplexMatrix::diagonal(d)) <= 1e-15);
    CHECK(max_abs_diff(partial_trace(rho, Side::B).matrix(), ComplexMatrix::diagonal(d)) <= 1e-15);
  }
}

TEST_CASE("isospectral pair has matching global and local spectra") {
  const auto [rho, sigma] = isospectral_pair();
  const double expected[] = {2.0 / 3, 1.0 / 3, 0, 0};
  for (const auto* s : {&rho, &sigma}) {
    for (int i = 0; i < 4; ++i) CHECK(std::abs(s->eigenvalues()[i] - expected[i]) <= 1e-12);
    for (Side side : {Side::A, Side::B}) {
      const auto m = partial_trace(*s, side);
      CHECK(m.eigenvalues()[0] == doctest::Approx(2.0 / 3));
      CHECK(m.eigenvalues()[1] == doctest::Approx(1.0 / 3));
    }
  }
}

TEST_CASE("random density matrices") {
  const auto pure = random_density_matrix(6, 1, 3);
  CHECK(pure.eigenvalues()[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(pure.eigenvalues()[1]) <= 1e-9);

  const auto a = random_density_matrix(4, 4, 42);
  const auto b = random_density_matrix(4, 4, 42);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
  CHECK(max_abs_diff(a.matrix(), random_density_matrix(4, 4, 43).matrix()) > 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t dim = 1 + seed % 9;
    const std::size_t rank = 1 + seed % dim;
    const auto r = random_density_matrix(dim, rank, seed);
    CHECK(std::abs(r.matrix().trace() - 1.0) <= 1e-10);
    CHECK(r.eigenvalues().back() >= -1e-9);
    std::size_t nonzero = 0;
    for (double l : r.eigenvalues()) nonzero += l > 1e-10 ? 1 : 0;
    CHECK(nonzero == rank);
  }
  CHECK(code_of([] { random_density_matrix(3, 0, 1); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { random_density_matrix(3, 4, 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("random separable states satisfy the necessary conditions") {
  const auto single = random_separable_state(3, 2, 1, 5);
  CHECK(single.eigenvalues()[0] == doctest::Approx(1.0));
  CHECK(partial_trace(single, Side::A).eigenvalues()[0] == doctest::Approx(1.0));
  CHECK(partial_trace(single, Side::B).eigenvalues()[0] == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t da = 2 + seed % 2;
    const std::size_t db = 2 + (seed / 2) % 2;
    const auto rho = random_separable_state(da, db, 1 + seed % 7, seed);
    const auto maj = majorization_criterion(rho);
    CHECK(maj.a.holds);
    CHECK(maj.b.holds);
    CHECK(min_eigenvalue(partial_transpose(rho, Side::B)) >= -1e-9);
  }
  CHECK(code_of([] { random_separable_state(2, 2, 0, 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("random entangled pure states violate the majorization criterion") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t da = 2 + seed % 2;
    const std::size_t db = 2 + (seed / 2) % 2;
    const auto psi = random_pure_state(da, db, seed);
    const auto a = partial_trace(psi, Side::A).eigenvalues();
    REQUIRE(a[0] < 1 - 1e-6);  // Schmidt rank > 1
    const auto maj = majorization_criterion(psi);
    CHECK_FALSE(maj.a.holds);
    CHECK_FALSE(maj.b.holds);
    // The reverse relation always holds: the marginal is more mixed.
    CHECK(is_majorized(Spectrum(a), Spectrum(psi.eigenvalues())).holds);
  }
}

TEST_CASE("random unitaries are unitary and conjugation preserves structure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_unitary(2 + seed, seed);
    CHECK(majsep::testing::unitarity_residual(u) <= 1e-12);
  }
  const auto rho = random_density_matrix({2, 3}, 1, 3, 8);
  const auto rotated = conjugate(rho, random_unitary(6, 1));
  CHECK(rotated.dims() == rho.dims());
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(rotated.eigenvalues()[i] - rho.eigenvalues()[i]) <= 1e-10);
}

}  // TEST_SUITE
