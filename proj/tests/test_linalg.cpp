// Copyright 2026 The cohdist Authors
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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "cohdist/linalg.hpp"
#include "cohdist/rng.hpp"
#include "cohdist/states.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cohdist {
namespace {

using testutil::approx_equal;
using testutil::matrix_from;
using testutil::random_unitary;
using testutil::throws_code;

// Rank-2 state with spectrum {0, 1/4, 3/4} and kernel span{(1,-1,1)/sqrt(3)};
// reused all over the suite as a nontrivial hand-checkable anchor.
ComplexMatrix anchor_state() {
  return 0.25 * matrix_from({{1.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 1.0}});
}

ComplexMatrix plus_projector() {
  return 0.5 * matrix_from({{1.0, 1.0}, {1.0, 1.0}});
}

ComplexMatrix random_hermitian(Index d, std::uint64_t seed) {
  GaussianSource source(seed);
  ComplexMatrix g(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) g(i, j) = source.complex_gaussian();
  }
  return 0.5 * (g + g.adjoint().eval());
}

TEST_CASE("hermitian_eig identity and projector spectra") {
  const auto id = hermitian_eig(ComplexMatrix::Identity(2, 2));
  CHECK(id.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

  const auto plus = hermitian_eig(plus_projector());
  CHECK(std::abs(plus.eigenvalues(0)) < 1e-12);
  CHECK(plus.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  const ComplexVector top = plus.eigenvectors.col(1);
  CHECK(std::abs(std::abs(top(0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(top(0) - top(1)) < 1e-12);
}

TEST_CASE("hermitian_eig anchor spectrum matches the root-finder oracle") {
  const ComplexMatrix m = anchor_state();
  const auto eig = hermitian_eig(m);
  REQUIRE(eig.eigenvalues.size() == 3);
  CHECK(std::abs(eig.eigenvalues(0) - 0.0) < 1e-12);
  CHECK(std::abs(eig.eigenvalues(1) - 0.25) < 1e-12);
  CHECK(std::abs(eig.eigenvalues(2) - 0.75) < 1e-12);

  const std::vector<double> reference = oracle::eigenvalues(m);
  REQUIRE(reference.size() == 3);
  CHECK(std::abs(reference[0] - 0.0) < 1e-9);
  CHECK(std::abs(reference[1] - 0.25) < 1e-9);
  CHECK(std::abs(reference[2] - 0.75) < 1e-9);
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK(throws_code(ErrorCode::NotSquare, [] { hermitian_eig(ComplexMatrix::Zero(2, 3)); }));
  CHECK(throws_code(ErrorCode::NotHermitian, [] {
    hermitian_eig(matrix_from({{0.0, 1.0}, {0.0, 0.0}}));
  }));
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK(throws_code(ErrorCode::NotFinite, [&] { hermitian_eig(bad); }));
}

TEST_CASE("hermitian_eig reconstructs and returns an orthonormal frame") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 7);
    const ComplexMatrix m = random_hermitian(d, derive_seed(401, seed));
    const auto eig = hermitian_eig(m);
    ComplexMatrix rebuilt = eig.eigenvectors *
                            eig.eigenvalues.cast<Complex>().asDiagonal() *
                            eig.eigenvectors.adjoint();
    CHECK((rebuilt - m).norm() <= 1e-9 * m.norm());
    CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - ComplexMatrix::Identity(d, d))
              .norm() < 1e-9);
  }
}

TEST_CASE("hermitian_eig of a density matrix gives a probability spectrum") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 5);
    const DensityMatrix rho = random_density(d, 1 + static_cast<Index>(seed % d),
                                             derive_seed(402, seed));
    const auto eig = hermitian_eig(rho.mat());
    CHECK(eig.eigenvalues(0) >= -1e-9);
    CHECK(std::abs(eig.eigenvalues.sum() - 1.0) < 1e-9);
  }
}

TEST_CASE("numerical_rank on fixed cases") {
  CHECK(numerical_rank(ComplexMatrix::Zero(3, 3)) == 0);
  CHECK(numerical_rank(plus_projector()) == 1);
  CHECK(numerical_rank(anchor_state()) == 2);

  const std::vector<double> anchor_eigs = oracle::eigenvalues(anchor_state());
  CHECK(oracle::rank_from_eigenvalues(anchor_eigs, TolerancePolicy{}) == 2);
}

TEST_CASE("numerical_rank is exactly permutation invariant") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 11);
    GaussianSource source(derive_seed(403, seed));
    ComplexMatrix a(d, d);
    for (Index j = 0; j < d; ++j) {
      for (Index i = 0; i < d; ++i) a(i, j) = source.complex_gaussian();
    }
    if (seed % 3 == 0) a.col(d - 1) = a.col(0);  // force rank deficiency sometimes

    Eigen::PermutationMatrix<Eigen::Dynamic> perm(d);
    perm.setIdentity();
    for (Index i = d - 1; i > 0; --i) {
      const Index j = static_cast<Index>(source.next_u64() % static_cast<std::uint64_t>(i + 1));
      std::swap(perm.indices()(i), perm.indices()(j));
    }
    const ComplexMatrix permuted = perm * a * perm.transpose();
    CHECK(numerical_rank(permuted) == numerical_rank(a));

    const ComplexMatrix u = random_unitary(d, derive_seed(404, seed));
    CHECK(numerical_rank(u * a * u.adjoint()) == numerical_rank(a));
  }
}

TEST_CASE("kernel_basis fixed cases with canonical phases") {
  const ComplexMatrix none = kernel_basis(ComplexMatrix::Identity(3, 3));
  CHECK(none.rows() == 3);
  CHECK(none.cols() == 0);

  const ComplexMatrix plus_kernel = kernel_basis(plus_projector());
  REQUIRE(plus_kernel.cols() == 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(plus_kernel(0, 0) - Complex(inv_sqrt2, 0.0)) < 1e-12);
  CHECK(std::abs(plus_kernel(1, 0) - Complex(-inv_sqrt2, 0.0)) < 1e-12);

  const ComplexMatrix m = anchor_state();
  const ComplexMatrix anchor_kernel = kernel_basis(m);
  REQUIRE(anchor_kernel.cols() == 1);
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(anchor_kernel(0, 0) - Complex(inv_sqrt3, 0.0)) < 1e-12);
  CHECK(std::abs(anchor_kernel(1, 0) - Complex(-inv_sqrt3, 0.0)) < 1e-12);
  CHECK(std::abs(anchor_kernel(2, 0) - Complex(inv_sqrt3, 0.0)) < 1e-12);
  CHECK((m * anchor_kernel.col(0)).norm() < 1e-12);
}

TEST_CASE("kernel_basis spans the kernel orthonormally") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 6);
    const Index rank = 1 + static_cast<Index>(seed % d);
    const DensityMatrix rho = random_density(d, rank, derive_seed(405, seed));
    const ComplexMatrix basis = kernel_basis(rho.mat());
    CHECK(basis.cols() == d - rank);
    if (basis.cols() == 0) continue;
    CHECK((basis.adjoint() * basis - ComplexMatrix::Identity(basis.cols(), basis.cols()))
              .norm() < 1e-9);
    CHECK((rho.mat() * basis).norm() <= 1e-9 * rho.mat().norm());

    const auto eig = hermitian_eig(rho.mat());
    for (Index k = 0; k < d; ++k) {
      if (eig.eigenvalues(k) <= 1e-9) continue;
      CHECK((eig.eigenvectors.col(k).adjoint() * basis).norm() < 1e-8);
    }
  }
}

TEST_CASE("kernel_basis depends only on the kernel subspace") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index d = 3 + static_cast<Index>(seed % 4);
    const Index rank = 1 + static_cast<Index>(seed % (d - 1));
    const ComplexMatrix m = random_density(d, rank, derive_seed(406, seed)).mat();
    const ComplexMatrix base = kernel_basis(m);

    // Scaling and squaring change the spectrum but not the kernel; the
    // canonical basis must agree column by column.
    const ComplexMatrix scaled = kernel_basis(ComplexMatrix(2.0 * m));
    const ComplexMatrix squared = kernel_basis(ComplexMatrix(m * m));
    REQUIRE(scaled.cols() == base.cols());
    REQUIRE(squared.cols() == base.cols());
    CHECK(approx_equal(scaled, base, 1e-8));
    CHECK(approx_equal(squared, base, 1e-7));
  }
}

TEST_CASE("tensor_product fixed cases and index convention") {
  CHECK(approx_equal(tensor_product(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
                     ComplexMatrix::Identity(4, 4), 0.0));

  const ComplexMatrix da = matrix_from({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix db = matrix_from({{0.0, 0.0}, {0.0, 1.0}});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(approx_equal(tensor_product(da, db), expected, 0.0));

  const ComplexMatrix quarter = tensor_product(plus_projector(), plus_projector());
  CHECK(approx_equal(quarter, ComplexMatrix::Constant(4, 4, Complex(0.25, 0.0)), 1e-15));
  CHECK(approx_equal(quarter, oracle::kron(plus_projector(), plus_projector()), 0.0));

  // Composite row index is i_a * dim_b + i_b.
  const ComplexMatrix shift = matrix_from({{0.0, 1.0}, {0.0, 0.0}});
  const ComplexMatrix s2 = tensor_product(shift, ComplexMatrix::Identity(2, 2));
  CHECK(s2(0, 2) == Complex(1.0, 0.0));
  CHECK(s2(1, 3) == Complex(1.0, 0.0));
  CHECK(s2.cwiseAbs().sum() == doctest::Approx(2.0));
}

TEST_CASE("tensor_product rank is multiplicative on PSD factors") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index da = 2 + static_cast<Index>(seed % 3);
    const Index db = 2 + static_cast<Index>((seed / 3) % 3);
    const Index ra = 1 + static_cast<Index>(seed % da);
    const Index rb = 1 + static_cast<Index>((seed / 5) % db);
    const ComplexMatrix a = random_density(da, ra, derive_seed(407, seed)).mat();
    const ComplexMatrix b = random_density(db, rb, derive_seed(408, seed)).mat();
    CHECK(numerical_rank(tensor_product(a, b)) == ra * rb);
  }
}

TEST_CASE("tensor_product agrees with the direct Kronecker oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GaussianSource source(derive_seed(409, seed));
    const Index da = 2 + static_cast<Index>(seed % 2);
    const Index db = 2 + static_cast<Index>((seed / 2) % 2);
    ComplexMatrix a(da, da);
    ComplexMatrix b(db, db);
    for (Index j = 0; j < da; ++j) {
      for (Index i = 0; i < da; ++i) a(i, j) = source.complex_gaussian();
    }
    for (Index j = 0; j < db; ++j) {
      for (Index i = 0; i < db; ++i) b(i, j) = source.complex_gaussian();
    }
    CHECK(approx_equal(tensor_product(a, b), oracle::kron(a, b), 0.0));
  }
}

TEST_CASE("operator_norm fixed cases") {
  CHECK(operator_norm(ComplexMatrix::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(matrix_from({{0.0, 2.0}, {0.0, 0.0}})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(operator_norm(plus_projector()) == doctest::Approx(1.0).epsilon(1e-12));
}

}  // namespace
}  // namespace cohdist
