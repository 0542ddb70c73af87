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

// Brute-force reference implementations used only by the test suite. Each
// oracle recomputes a result along a path disjoint from the library: no
// decomposition routines, no production predicates, only plain matrix
// arithmetic. They are deliberately naive (factorial or exponential) and
// carry hard dimension caps.

#ifndef COHDIST_TESTS_ORACLES_HPP_
#define COHDIST_TESTS_ORACLES_HPP_

#include <vector>

#include "cohdist/types.hpp"

namespace cohdist::oracle {

/// Eigenvalues of a Hermitian matrix, ascending. Closed-form for d <= 3
/// (quadratic / trigonometric cubic); for 4 <= d <= 6 the characteristic
/// polynomial (Faddeev-LeVerrier) is solved by sign-change bisection on a
/// refining grid, which requires a simple spectrum. Throws when roots cannot
/// be isolated or d > 6.
std::vector<double> eigenvalues(const ComplexMatrix& m);

/// Rank as the count of eigenvalue magnitudes above the tolerance threshold.
Index rank_from_eigenvalues(const std::vector<double>& eigenvalues,
                            const TolerancePolicy& tol);

/// Shannon entropy in bits of a probability list; non-positive entries
/// contribute zero.
double entropy_bits(const std::vector<double>& p);

/// S(diagonal) - S(spectrum) in bits via the eigenvalue oracle above.
double distillable_coherence(const ComplexMatrix& rho, const TolerancePolicy& tol);

/// True when some principal submatrix of size >= 2 has numerical rank one
/// and contains an off-diagonal entry above threshold. Exhaustive over all
/// index subsets; d <= 6.
bool submatrix_scan(const ComplexMatrix& rho, const TolerancePolicy& tol);

struct ApplyResult {
  ComplexMatrix matrix;  // K rho K^dagger, unnormalized
  double trace;
};

/// Literal quadruple-loop K rho K^dagger.
ApplyResult apply(const ComplexMatrix& k, const ComplexMatrix& rho);

/// Finest block-diagonal structure over all index permutations; d <= 7.
/// Returns sorted index sets ordered by smallest member.
std::vector<std::vector<Index>> blocks_by_permutation(const ComplexMatrix& rho,
                                                      const TolerancePolicy& tol);

/// Direct four-loop Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cohdist::oracle

#endif  // COHDIST_TESTS_ORACLES_HPP_
