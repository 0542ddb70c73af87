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

#ifndef COHDIST_STATES_HPP_
#define COHDIST_STATES_HPP_

#include <cstdint>
#include <vector>

#include "cohdist/types.hpp"

namespace cohdist {

/// Density matrix validated against one fixed reference basis (the
/// computational basis of the stored matrix). Validation admits square,
/// finite, Hermitian, positive semidefinite, unit-trace matrices, each
/// judged within the tolerance policy; the stored matrix is kept exactly as
/// given so that serialization round-trips.
class DensityMatrix {
 public:
  static DensityMatrix validated(const ComplexMatrix& m, const TolerancePolicy& tol = {});

  /// Tensor product of two validated states. The product of valid density
  /// matrices is again valid, so this skips re-validation; important because
  /// eigenvalue checks on large composite dimensions are cubic.
  static DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

  Index dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& mat() const noexcept { return mat_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Unit vector in the reference basis.
class PureState {
 public:
  static PureState validated(const ComplexVector& v, const TolerancePolicy& tol = {});

  Index dim() const noexcept { return amplitudes_.rows(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  /// Rank-one density matrix of the renormalized vector.
  DensityMatrix projector(const TolerancePolicy& tol = {}) const;

 private:
  explicit PureState(ComplexVector v) : amplitudes_(std::move(v)) {}
  ComplexVector amplitudes_;
};

/// Sorted 0-based basis indices carrying non-negligible amplitude.
using SupportSet = std::vector<Index>;

/// True when every off-diagonal entry is negligible relative to the largest
/// entry magnitude.
bool is_incoherent_state(const DensityMatrix& rho, const TolerancePolicy& tol = {});

SupportSet coherence_support(const PureState& psi, const TolerancePolicy& tol = {});

/// Projection onto the diagonal (full dephasing); off-diagonal entries become
/// exact zeros.
DensityMatrix dephase(const DensityMatrix& rho, const TolerancePolicy& tol = {});

/// Asymptotic distillable coherence S(dephase(rho)) - S(rho), in bits.
double distillable_coherence_asymptotic(const DensityMatrix& rho,
                                        const TolerancePolicy& tol = {});

/// (|1> + ... + |d>) / sqrt(d).
PureState maximally_coherent(Index dim);

/// Seeded random density matrix of exact rank `rank`: rho = A A^dagger / tr,
/// with A a dim x rank standard complex Gaussian matrix filled column by
/// column. Identical (dim, rank, seed) give bit-identical output on every
/// platform.
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);

/// Seeded random direct sum: block k has dimension dims[k], exact rank
/// ranks[k], and a Dirichlet(1) random weight. Blocks of dimension at least 2
/// are redrawn until irreducible, so the decomposition structure of the
/// result is exactly the requested one.
DensityMatrix random_block_state(const std::vector<Index>& dims,
                                 const std::vector<Index>& ranks, std::uint64_t seed,
                                 const TolerancePolicy& tol = {});

}  // namespace cohdist

#endif  // COHDIST_STATES_HPP_
