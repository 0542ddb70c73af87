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

#ifndef COHDIST_DISTILL_HPP_
#define COHDIST_DISTILL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohdist/blocks.hpp"
#include "cohdist/channels.hpp"
#include "cohdist/states.hpp"
#include "cohdist/types.hpp"

namespace cohdist {

struct BlockRankInfo {
  Index dim = 0;
  Index rank = 0;
  bool full_rank = true;
};

/// Verdicts for one state under the three stochastic free-operation classes.
///
/// A state admits probabilistic distillation of a pure coherent state by
/// incoherent operations exactly when some irreducible component of its
/// direct-sum decomposition is rank deficient. Maximal incoherent operations
/// decide by the same criterion, so `smio` always equals `sio`. Strictly
/// incoherent operations succeed exactly when some coherent 2x2 principal
/// submatrix has rank one, a strictly stronger requirement.
struct DistillabilityReport {
  bool sio = false;
  bool smio = false;
  bool ssio = false;
  BlockDecomposition decomposition;
  std::vector<BlockRankInfo> block_ranks;  // aligned with decomposition.blocks
  std::vector<IndexPair> rank_one_pairs;   // coherent rank-one 2x2 witnesses, i < j
  std::vector<std::string> warnings;
};

DistillabilityReport distillability(const DensityMatrix& rho, const TolerancePolicy& tol = {});

bool is_distillable_sio(const DensityMatrix& rho, const TolerancePolicy& tol = {});
bool is_distillable_smio(const DensityMatrix& rho, const TolerancePolicy& tol = {});
bool is_distillable_ssio(const DensityMatrix& rho, const TolerancePolicy& tol = {});

/// All pairs i < j with non-negligible rho_ij whose 2x2 principal submatrix
/// is rank one within tolerance.
std::vector<IndexPair> rank_one_coherent_pairs(const DensityMatrix& rho,
                                               const TolerancePolicy& tol = {});

/// An explicit single-Kraus distillation protocol, verified before return:
/// `kraus` is incoherent with unit operator norm, succeeds with positive
/// probability, and its normalized output is the two-dimensional maximally
/// coherent state (exactly, thanks to the phase canonicalization of the
/// kernel vector).
struct DistillationWitness {
  KrausOperator kraus;      // 2 x dim
  SupportSet source_block;  // original indices of the rank-deficient component used
  PureState kernel_vector;  // kernel vector of that component, embedded in the full space
  Index c1_index;           // index of its largest amplitude (real positive by convention)
  double probability;       // tr(K rho K^dagger)
  DensityMatrix output;     // normalized K rho K^dagger
};

/// Builds the witness from the first rank-deficient irreducible component:
/// with kernel vector psi, largest amplitude c1 at index i1, and
/// psi1 = psi - c1 |i1>, the operator is
///
///   K = (-c1 |1><i1| + |2><psi1|) / ||.||_op
///
/// which has at most one non-negligible entry per column because psi1 is
/// zero at i1. Throws NotDistillable when every component has full rank.
DistillationWitness construct_witness(const DensityMatrix& rho,
                                      const TolerancePolicy& tol = {});

/// Distillability of rho^(tensor n). The verdict is independent of n >= 1;
/// this evaluates it directly as a consistency check. Composite dimensions
/// above 4096 are refused (DimensionTooLarge).
bool is_n_distillable(const DensityMatrix& rho, Index n, const TolerancePolicy& tol = {});

struct FalsificationResult {
  KrausOperator kraus;  // incoherent, unit operator norm
  double probability;
};

/// Randomized search for a single incoherent Kraus operator onto a qubit
/// whose post-selected output is pure and coherent. Each trial assigns every
/// input column to output row 1, row 2, or neither (uniformly), fills the
/// assigned entries with standard complex Gaussians, and rescales to unit
/// operator norm. Trial k depends only on (seed, k). Any candidate is
/// re-verified through apply_single before being returned.
std::optional<FalsificationResult> falsification_search(const DensityMatrix& rho,
                                                        Index trials, std::uint64_t seed,
                                                        const TolerancePolicy& tol = {});

}  // namespace cohdist

#endif  // COHDIST_DISTILL_HPP_
