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

#include "cohdist/states.hpp"

#include <cmath>
#include <string>

#include "cohdist/blocks.hpp"
#include "cohdist/linalg.hpp"
#include "cohdist/rng.hpp"

namespace cohdist {

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m, const TolerancePolicy& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorCode::NotSquare, "density matrix must be square and non-empty, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::NotFinite, "density matrix has non-finite entries");
  }
  const double hermitian_defect = (m - m.adjoint()).norm();
  if (hermitian_defect > tol.magnitude_threshold(m.norm())) {
    throw Error(ErrorCode::NotHermitian,
                "||rho - rho^dagger||_F = " + std::to_string(hermitian_defect));
  }
  const Complex trace = m.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > tol.rel_eps()) {
    throw Error(ErrorCode::TraceNotOne, "tr(rho) = " + std::to_string(trace.real()) + " + " +
                                            std::to_string(trace.imag()) + "i");
  }
  const EigenDecomposition eig = hermitian_eig(m, tol);
  const double min_eigenvalue = eig.eigenvalues(0);
  if (min_eigenvalue < -tol.rel_eps()) {
    throw Error(ErrorCode::NotPsd,
                "smallest eigenvalue = " + std::to_string(min_eigenvalue));
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor_product(a.mat(), b.mat()));
}

PureState PureState::validated(const ComplexVector& v, const TolerancePolicy& tol) {
  if (v.rows() < 1) {
    throw Error(ErrorCode::InvalidArgument, "pure state must have dimension at least 1");
  }
  ComplexMatrix as_matrix = v;
  if (!all_finite(as_matrix)) {
    throw Error(ErrorCode::NotFinite, "pure state has non-finite amplitudes");
  }
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > tol.rel_eps()) {
    throw Error(ErrorCode::NotNormalized, "||psi|| = " + std::to_string(norm));
  }
  return PureState(v);
}

DensityMatrix PureState::projector(const TolerancePolicy& tol) const {
  const ComplexVector unit = amplitudes_ / amplitudes_.norm();
  return DensityMatrix::validated(unit * unit.adjoint(), tol);
}

bool is_incoherent_state(const DensityMatrix& rho, const TolerancePolicy& tol) {
  const ComplexMatrix& m = rho.mat();
  const double threshold = tol.magnitude_threshold(max_abs(m));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > threshold) return false;
    }
  }
  return true;
}

SupportSet coherence_support(const PureState& psi, const TolerancePolicy& tol) {
  const ComplexVector& v = psi.amplitudes();
  double peak = 0.0;
  for (Index i = 0; i < v.rows(); ++i) peak = std::max(peak, std::abs(v(i)));
  const double threshold = tol.magnitude_threshold(peak);
  SupportSet support;
  for (Index i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i)) > threshold) support.push_back(i);
  }
  return support;
}

DensityMatrix dephase(const DensityMatrix& rho, const TolerancePolicy& tol) {
  ComplexMatrix diag = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (Index i = 0; i < rho.dim(); ++i) {
    diag(i, i) = Complex(rho.mat()(i, i).real(), 0.0);
  }
  return DensityMatrix::validated(diag, tol);
}

namespace {

// Shannon entropy in bits; entries at or below zero contribute nothing.
double entropy_bits(const RealVector& p) {
  double h = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) h -= p(i) * std::log2(p(i));
  }
  return h;
}

}  // namespace

double distillable_coherence_asymptotic(const DensityMatrix& rho, const TolerancePolicy& tol) {
  RealVector diagonal(rho.dim());
  for (Index i = 0; i < rho.dim(); ++i) diagonal(i) = rho.mat()(i, i).real();
  const EigenDecomposition eig = hermitian_eig(rho.mat(), tol);
  return entropy_bits(diagonal) - entropy_bits(eig.eigenvalues);
}

PureState maximally_coherent(Index dim) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "maximally_coherent: dimension must be at least 1");
  }
  ComplexVector v = ComplexVector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  return PureState::validated(v);
}

namespace {

// dim x rank standard complex Gaussian, filled column by column. The fill
// order is part of the seeded contract.
ComplexMatrix gaussian_factor(Index dim, Index rank, GaussianSource& source) {
  ComplexMatrix a(dim, rank);
  for (Index j = 0; j < rank; ++j) {
    for (Index i = 0; i < dim; ++i) a(i, j) = source.complex_gaussian();
  }
  return a;
}

ComplexMatrix normalized_wishart(Index dim, Index rank, GaussianSource& source) {
  const ComplexMatrix a = gaussian_factor(dim, rank, source);
  ComplexMatrix w = a * a.adjoint();
  return w / w.trace().real();
}

}  // namespace

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_density: dimension must be at least 1");
  }
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::InvalidArgument,
                "random_density: rank must lie in [1, dim], got " + std::to_string(rank));
  }
  GaussianSource source(seed);
  return DensityMatrix::validated(normalized_wishart(dim, rank, source));
}

DensityMatrix random_block_state(const std::vector<Index>& dims, const std::vector<Index>& ranks,
                                 std::uint64_t seed, const TolerancePolicy& tol) {
  if (dims.empty() || dims.size() != ranks.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "random_block_state: dims and ranks must be non-empty and equally sized");
  }
  Index total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 1) {
      throw Error(ErrorCode::InvalidArgument, "random_block_state: block dims must be >= 1");
    }
    if (ranks[k] < 1 || ranks[k] > dims[k]) {
      throw Error(ErrorCode::InvalidArgument,
                  "random_block_state: block rank must lie in [1, dim]");
    }
    total += dims[k];
  }

  GaussianSource source(seed);

  // Dirichlet(1, ..., 1) block weights via normalized exponentials.
  std::vector<double> weights(dims.size());
  double weight_sum = 0.0;
  for (double& w : weights) {
    w = -std::log(1.0 - source.uniform());
    weight_sum += w;
  }
  for (double& w : weights) w /= weight_sum;

  ComplexMatrix assembled = ComplexMatrix::Zero(total, total);
  Index offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const Index d = dims[k];
    ComplexMatrix block(d, d);
    if (d == 1) {
      block(0, 0) = Complex(1.0, 0.0);
    } else {
      // Redraw until the block is irreducible, so the requested block
      // structure is the actual one. Gaussian draws essentially never repeat
      // this loop; the cap only guards against misuse.
      bool accepted = false;
      for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
        block = normalized_wishart(d, ranks[k], source);
        accepted = is_irreducible(DensityMatrix::validated(block, tol), tol);
      }
      if (!accepted) {
        throw Error(ErrorCode::InvalidArgument,
                    "random_block_state: could not draw an irreducible block");
      }
    }
    assembled.block(offset, offset, d, d) = weights[k] * block;
    offset += d;
  }
  return DensityMatrix::validated(assembled, tol);
}

}  // namespace cohdist
