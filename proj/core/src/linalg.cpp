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

#include "cohdist/linalg.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cohdist {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare,
                std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* who) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::NotFinite, std::string(who) + ": matrix has non-finite entries");
  }
}

void require_hermitian(const ComplexMatrix& m, const TolerancePolicy& tol, const char* who) {
  const double deviation = (m - m.adjoint()).norm();
  if (deviation > tol.magnitude_threshold(m.norm())) {
    throw Error(ErrorCode::NotHermitian,
                std::string(who) + ": ||M - M^dagger||_F = " + std::to_string(deviation));
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, const TolerancePolicy& tol) {
  require_square(m, "hermitian_eig");
  require_finite(m, "hermitian_eig");
  require_hermitian(m, tol, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "hermitian_eig: eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Index numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol) {
  require_finite(m, "numerical_rank");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double threshold = tol.magnitude_threshold(sigma(0));
  Index rank = 0;
  for (Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > threshold) ++rank;
  }
  return rank;
}

ComplexMatrix kernel_basis(const ComplexMatrix& m, const TolerancePolicy& tol) {
  require_square(m, "kernel_basis");
  require_finite(m, "kernel_basis");
  require_hermitian(m, tol, "kernel_basis");
  const Index n = m.rows();

  // Rank decision and kernel dimension come from the same singular values,
  // so rank + kernel size always equals n.
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();
  const double threshold = tol.magnitude_threshold(sigma.size() > 0 ? sigma(0) : 0.0);
  Index rank = 0;
  for (Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > threshold) ++rank;
  }
  const Index kdim = n - rank;
  if (kdim == 0) return ComplexMatrix(n, 0);

  // Row-space projector. For a Hermitian input the row space is the span of
  // the right singular vectors with non-negligible singular value, and the
  // projector is independent of any arbitrary basis choice the SVD made
  // inside degenerate subspaces.
  const ComplexMatrix row_space = svd.matrixV().leftCols(rank);
  ComplexMatrix reduced = row_space * row_space.adjoint();

  // Fully pivoted Gauss-Jordan elimination with exactly `rank` steps. Ties in
  // the pivot search resolve to the smallest (row, col) in row-major order,
  // which makes the output reproducible.
  std::vector<bool> row_used(static_cast<std::size_t>(n), false);
  std::vector<bool> col_used(static_cast<std::size_t>(n), false);
  std::vector<IndexPair> pivots;
  pivots.reserve(static_cast<std::size_t>(rank));
  for (Index step = 0; step < rank; ++step) {
    Index pi = -1, pj = -1;
    double best = -1.0;
    for (Index i = 0; i < n; ++i) {
      if (row_used[static_cast<std::size_t>(i)]) continue;
      for (Index j = 0; j < n; ++j) {
        if (col_used[static_cast<std::size_t>(j)]) continue;
        const double mag = std::abs(reduced(i, j));
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    reduced.row(pi) /= reduced(pi, pj);
    for (Index i = 0; i < n; ++i) {
      if (i == pi) continue;
      reduced.row(i) -= reduced(i, pj) * reduced.row(pi);
    }
    row_used[static_cast<std::size_t>(pi)] = true;
    col_used[static_cast<std::size_t>(pj)] = true;
    pivots.emplace_back(pi, pj);
  }

  ComplexMatrix basis(n, kdim);
  Index out = 0;
  for (Index free_col = 0; free_col < n; ++free_col) {
    if (col_used[static_cast<std::size_t>(free_col)]) continue;
    ComplexVector v = ComplexVector::Zero(n);
    v(free_col) = Complex(1.0, 0.0);
    for (const IndexPair& p : pivots) {
      v(p.second) = -reduced(p.first, free_col);
    }
    // Remove rounding residue outside the kernel, then orthonormalize against
    // the columns already emitted (modified Gram-Schmidt).
    v -= row_space * (row_space.adjoint() * v);
    for (Index c = 0; c < out; ++c) {
      v -= basis.col(c) * basis.col(c).dot(v);
    }
    const double norm = v.norm();
    if (!(norm > 1e-8)) {
      throw Error(ErrorCode::InvalidArgument,
                  "kernel_basis: degenerate null vector; elimination is inconsistent");
    }
    v /= norm;
    Index peak = 0;
    double peak_mag = -1.0;
    for (Index i = 0; i < n; ++i) {
      const double mag = std::abs(v(i));
      if (mag > peak_mag) {
        peak_mag = mag;
        peak = i;
      }
    }
    v *= std::conj(v(peak)) / std::abs(v(peak));
    basis.col(out++) = v;
  }
  return basis;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      result.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return result;
}

double operator_norm(const ComplexMatrix& m) {
  require_finite(m, "operator_norm");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace cohdist
