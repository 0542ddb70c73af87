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

#ifndef COHDIST_LINALG_HPP_
#define COHDIST_LINALG_HPP_

#include "cohdist/types.hpp"

namespace cohdist {

struct EigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // unit-norm columns, eigenvectors[:, k] <-> eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix. The input must be square and
/// Hermitian within tol (relative Frobenius test).
EigenDecomposition hermitian_eig(const ComplexMatrix& m, const TolerancePolicy& tol = {});

/// Number of singular values above max(rel_eps * sigma_max, abs_floor).
Index numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol = {});

/// Orthonormal basis of the numerical kernel of a Hermitian PSD matrix,
/// returned as the columns of a dim x k matrix (k = dim - numerical_rank,
/// zero columns for full-rank input).
///
/// The basis is canonical: it depends only on the kernel as a subspace, not
/// on how the backing decomposition happened to parametrize a degenerate
/// eigenspace. It is produced by running a fully pivoted elimination on the
/// row-space projector, reading off the textbook null vectors of its reduced
/// form, and then orthonormalizing; each vector's globally largest entry is
/// made real and positive. Identical inputs therefore give bit-identical
/// output, and equal kernels give equal bases up to tolerance.
ComplexMatrix kernel_basis(const ComplexMatrix& m, const TolerancePolicy& tol = {});

/// Kronecker product; composite row index is i_a * b.rows() + i_b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

}  // namespace cohdist

#endif  // COHDIST_LINALG_HPP_
