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

// Anchors the oracles themselves on hand-checkable inputs, then runs the
// oracle-versus-production agreement sweeps (500 seeded states per oracle,
// dimensions within each oracle's cap).

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "cohdist/blocks.hpp"
#include "cohdist/channels.hpp"
#include "cohdist/distill.hpp"
#include "cohdist/linalg.hpp"
#include "cohdist/rng.hpp"
#include "cohdist/states.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cohdist {
namespace {

using testutil::approx_equal;
using testutil::matrix_from;
using testutil::throws_code;

ComplexMatrix anchor_state() {
  return 0.25 * matrix_from({{1.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 1.0}});
}

/// Draw dimensions across the eigenvalue oracle's range; the bisection path
/// (d >= 4) needs a simple spectrum, so those draws are full rank.
DensityMatrix eigenvalue_oracle_state(std::uint64_t seed) {
  GaussianSource pick(derive_seed(471, seed));
  const Index d = 2 + static_cast<Index>(pick.next_u64() % 5);
  const Index rank =
      d <= 3 ? 1 + static_cast<Index>(pick.next_u64() % static_cast<std::uint64_t>(d)) : d;
  return random_density(d, rank, derive_seed(472, seed));
}

TEST_CASE("eigenvalue oracle on fixed spectra") {
  const std::vector<double> id2 = oracle::eigenvalues(ComplexMatrix::Identity(2, 2));
  CHECK(std::abs(id2[0] - 1.0) < 1e-12);
  CHECK(std::abs(id2[1] - 1.0) < 1e-12);

  const std::vector<double> plus =
      oracle::eigenvalues(0.5 * matrix_from({{1.0, 1.0}, {1.0, 1.0}}));
  CHECK(std::abs(plus[0] - 0.0) < 1e-12);
  CHECK(std::abs(plus[1] - 1.0) < 1e-12);

  const std::vector<double> anchor = oracle::eigenvalues(anchor_state());
  CHECK(std::abs(anchor[0] - 0.0) < 1e-9);
  CHECK(std::abs(anchor[1] - 0.25) < 1e-9);
  CHECK(std::abs(anchor[2] - 0.75) < 1e-9);

  ComplexMatrix diag4 = ComplexMatrix::Zero(4, 4);
  diag4(0, 0) = 0.4;
  diag4(1, 1) = 0.3;
  diag4(2, 2) = 0.2;
  diag4(3, 3) = 0.1;
  const std::vector<double> spread = oracle::eigenvalues(diag4);
  CHECK(std::abs(spread[0] - 0.1) < 1e-9);
  CHECK(std::abs(spread[1] - 0.2) < 1e-9);
  CHECK(std::abs(spread[2] - 0.3) < 1e-9);
  CHECK(std::abs(spread[3] - 0.4) < 1e-9);

  CHECK(throws_code(ErrorCode::DimensionTooLarge,
                    [] { oracle::eigenvalues(ComplexMatrix::Identity(7, 7)); }));
  CHECK(throws_code(ErrorCode::NotSquare,
                    [] { oracle::eigenvalues(ComplexMatrix::Zero(2, 3)); }));
}

TEST_CASE("eigenvalue oracle agrees with the production solver") {
  // The trigonometric cubic resolves repeated roots only to about
  // sqrt(machine epsilon), so the comparison runs at the oracle's own
  // accuracy: 1e-7 on values, and a 1e-6 relative cutoff when counting rank.
  const TolerancePolicy oracle_rank_tol(1e-6, 1e-9);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const DensityMatrix rho = eigenvalue_oracle_state(seed);
    const std::vector<double> reference = oracle::eigenvalues(rho.mat());
    const RealVector produced = hermitian_eig(rho.mat()).eigenvalues;
    REQUIRE(static_cast<Index>(reference.size()) == produced.size());
    for (Index k = 0; k < produced.size(); ++k) {
      CHECK(std::abs(reference[static_cast<std::size_t>(k)] - produced(k)) < 1e-7);
    }
    CHECK(oracle::rank_from_eigenvalues(reference, oracle_rank_tol) ==
          numerical_rank(rho.mat()));
  }
}

TEST_CASE("entropy oracle fixed values") {
  CHECK(std::abs(oracle::entropy_bits({0.5, 0.5}) - 1.0) < 1e-12);
  CHECK(std::abs(oracle::entropy_bits({0.75, 0.25}) - 0.811278) < 1e-6);
  CHECK(oracle::entropy_bits({1.0, 0.0}) == 0.0);

  const double mixture = oracle::distillable_coherence(
      matrix_from({{0.5, 0.25}, {0.25, 0.5}}), TolerancePolicy{});
  CHECK(std::abs(mixture - 0.188722) < 1e-6);
}

TEST_CASE("entropy oracle agrees with the production rate") {
  // Near-zero oracle eigenvalues of degenerate spectra carry an error of
  // roughly 1e-8 which the logarithm amplifies, so the rate comparison is
  // meaningful to about 1e-6; 1e-5 leaves headroom.
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const DensityMatrix rho = eigenvalue_oracle_state(derive_seed(473, seed));
    const double reference = oracle::distillable_coherence(rho.mat(), TolerancePolicy{});
    CHECK(std::abs(reference - distillable_coherence_asymptotic(rho)) < 1e-5);
  }
}

TEST_CASE("subset scan oracle fixed verdicts") {
  const TolerancePolicy tol;
  CHECK(oracle::submatrix_scan(maximally_coherent(3).projector().mat(), tol));
  CHECK_FALSE(oracle::submatrix_scan(anchor_state(), tol));
  CHECK_FALSE(oracle::submatrix_scan(0.5 * ComplexMatrix::Identity(2, 2), tol));
  CHECK(throws_code(ErrorCode::DimensionTooLarge, [&] {
    oracle::submatrix_scan(ComplexMatrix::Identity(7, 7) / 7.0, tol);
  }));
}

TEST_CASE("subset scan oracle agrees with the pairwise criterion") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const DensityMatrix rho = testutil::random_test_state(derive_seed(474, seed), 6);
    CHECK(oracle::submatrix_scan(rho.mat(), TolerancePolicy{}) == is_distillable_ssio(rho));
  }
}

TEST_CASE("quadruple-loop application oracle fixed cases") {
  const ComplexMatrix rho = anchor_state();
  const oracle::ApplyResult same = oracle::apply(ComplexMatrix::Identity(3, 3), rho);
  CHECK(approx_equal(same.matrix, rho, 1e-15));
  CHECK(std::abs(same.trace - 1.0) < 1e-12);

  const oracle::ApplyResult nothing = oracle::apply(ComplexMatrix::Zero(3, 3), rho);
  CHECK(nothing.matrix.cwiseAbs().maxCoeff() == 0.0);
  CHECK(nothing.trace == 0.0);
}

TEST_CASE("application oracle agrees with apply_single") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    GaussianSource source(derive_seed(475, seed));
    const Index d = 2 + static_cast<Index>(source.next_u64() % 5);
    const Index out = 2 + static_cast<Index>(source.next_u64() % 3);
    ComplexMatrix k(out, d);
    for (Index j = 0; j < d; ++j) {
      for (Index i = 0; i < out; ++i) k(i, j) = source.complex_gaussian();
    }
    const double norm = operator_norm(k);
    if (norm > 1.0) k /= norm;

    const DensityMatrix rho = random_density(d, d, derive_seed(476, seed));
    const oracle::ApplyResult reference = oracle::apply(k, rho.mat());
    const ApplyOutcome produced = apply_single(KrausOperator(k), rho);
    CHECK(std::abs(reference.trace - produced.probability) < 1e-12);
    if (!produced.zero_probability()) {
      CHECK(approx_equal(reference.matrix / reference.trace, produced.state->mat(), 1e-12));
    }
  }
}

TEST_CASE("permutation-search block oracle fixed cases") {
  const TolerancePolicy tol;
  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 0.2;
  diag(1, 1) = 0.3;
  diag(2, 2) = 0.5;
  CHECK(oracle::blocks_by_permutation(diag, tol) ==
        std::vector<std::vector<Index>>{{0}, {1}, {2}});

  CHECK(oracle::blocks_by_permutation(anchor_state(), tol) ==
        std::vector<std::vector<Index>>{{0, 1, 2}});

  // Two-block state with indices interleaved by relabeling 1 <-> 2.
  ComplexMatrix two = ComplexMatrix::Zero(3, 3);
  two.block(0, 0, 2, 2) = 0.25 * matrix_from({{1.0, 1.0}, {1.0, 1.0}});
  two(2, 2) = 0.5;
  ComplexMatrix swapped = ComplexMatrix::Zero(3, 3);
  swapped(0, 0) = two(0, 0);
  swapped(0, 2) = two(0, 1);
  swapped(2, 0) = two(1, 0);
  swapped(2, 2) = two(1, 1);
  swapped(1, 1) = two(2, 2);
  CHECK(oracle::blocks_by_permutation(two, tol) ==
        std::vector<std::vector<Index>>{{0, 1}, {2}});
  CHECK(oracle::blocks_by_permutation(swapped, tol) ==
        std::vector<std::vector<Index>>{{0, 2}, {1}});

  CHECK(throws_code(ErrorCode::DimensionTooLarge, [&] {
    oracle::blocks_by_permutation(ComplexMatrix::Identity(8, 8) / 8.0, tol);
  }));
}

TEST_CASE("permutation-search block oracle agrees with the decomposition") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const DensityMatrix rho = testutil::random_test_state(derive_seed(477, seed), 7);
    const std::vector<std::vector<Index>> reference =
        oracle::blocks_by_permutation(rho.mat(), TolerancePolicy{});
    const BlockDecomposition produced = irreducible_blocks(rho);
    REQUIRE(reference.size() == produced.blocks.size());
    for (std::size_t k = 0; k < reference.size(); ++k) {
      CHECK(reference[k] == produced.blocks[k].indices);
    }
  }
}

TEST_CASE("Kronecker oracle matches tensor_product") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GaussianSource source(derive_seed(478, seed));
    const Index da = 1 + static_cast<Index>(source.next_u64() % 3);
    const Index db = 1 + static_cast<Index>(source.next_u64() % 3);
    ComplexMatrix a(da, da);
    ComplexMatrix b(db, db);
    for (Index j = 0; j < da; ++j) {
      for (Index i = 0; i < da; ++i) a(i, j) = source.complex_gaussian();
    }
    for (Index j = 0; j < db; ++j) {
      for (Index i = 0; i < db; ++i) b(i, j) = source.complex_gaussian();
    }
    CHECK(approx_equal(oracle::kron(a, b), tensor_product(a, b), 0.0));
  }
}

}  // namespace
}  // namespace cohdist
