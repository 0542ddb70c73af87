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

#include "cohdist/channels.hpp"

#include <cmath>
#include <string>

#include "cohdist/linalg.hpp"

namespace cohdist {

KrausOperator::KrausOperator(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() < 1 || mat_.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "Kraus operator must be non-empty");
  }
  if (!all_finite(mat_)) {
    throw Error(ErrorCode::NotFinite, "Kraus operator has non-finite entries");
  }
}

namespace {

// Counts non-negligible entries per column (and per row when requested),
// against a threshold scaled by the largest entry of the operator itself.
bool at_most_one_per_line(const ComplexMatrix& m, const TolerancePolicy& tol,
                          bool check_rows) {
  const double threshold = tol.magnitude_threshold(max_abs(m));
  for (Index j = 0; j < m.cols(); ++j) {
    int nonzero = 0;
    for (Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > threshold && ++nonzero > 1) return false;
    }
  }
  if (check_rows) {
    for (Index i = 0; i < m.rows(); ++i) {
      int nonzero = 0;
      for (Index j = 0; j < m.cols(); ++j) {
        if (std::abs(m(i, j)) > threshold && ++nonzero > 1) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_incoherent_kraus(const KrausOperator& k, const TolerancePolicy& tol) {
  return at_most_one_per_line(k.mat(), tol, false);
}

bool is_strictly_incoherent_kraus(const KrausOperator& k, const TolerancePolicy& tol) {
  return at_most_one_per_line(k.mat(), tol, true);
}

StochasticChannel StochasticChannel::validated(std::vector<KrausOperator> elements,
                                               const TolerancePolicy& tol) {
  if (elements.empty()) {
    throw Error(ErrorCode::InvalidArgument, "channel needs at least one Kraus element");
  }
  const Index in_dim = elements.front().in_dim();
  const Index out_dim = elements.front().out_dim();
  for (const KrausOperator& k : elements) {
    if (k.in_dim() != in_dim || k.out_dim() != out_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "Kraus elements disagree on dimensions: expected " +
                      std::to_string(out_dim) + "x" + std::to_string(in_dim) + ", got " +
                      std::to_string(k.out_dim()) + "x" + std::to_string(k.in_dim()));
    }
  }

  ComplexMatrix gram = ComplexMatrix::Zero(in_dim, in_dim);
  for (const KrausOperator& k : elements) {
    gram += k.mat().adjoint() * k.mat();
  }
  const EigenDecomposition eig = hermitian_eig(gram, tol);
  const double completion_bound = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (completion_bound > 1.0 + tol.rel_eps()) {
    throw Error(ErrorCode::SubnormalizationViolated,
                "largest eigenvalue of sum K^dagger K = " + std::to_string(completion_bound));
  }

  std::vector<KrausClassification> classifications;
  classifications.reserve(elements.size());
  for (const KrausOperator& k : elements) {
    classifications.push_back(KrausClassification{
        is_incoherent_kraus(k, tol), is_strictly_incoherent_kraus(k, tol)});
  }
  return StochasticChannel(std::move(elements), std::move(classifications), completion_bound);
}

bool StochasticChannel::all_incoherent() const noexcept {
  for (const KrausClassification& c : classifications_) {
    if (!c.incoherent) return false;
  }
  return true;
}

bool StochasticChannel::all_strictly_incoherent() const noexcept {
  for (const KrausClassification& c : classifications_) {
    if (!c.strictly_incoherent) return false;
  }
  return true;
}

namespace {

ApplyOutcome outcome_from_unnormalized(const ComplexMatrix& transformed,
                                       const TolerancePolicy& tol) {
  const double probability = std::max(transformed.trace().real(), 0.0);
  if (probability <= tol.abs_floor()) {
    return ApplyOutcome{probability, std::nullopt};
  }
  return ApplyOutcome{probability,
                      DensityMatrix::validated(transformed / probability, tol)};
}

}  // namespace

ApplyOutcome apply_single(const KrausOperator& k, const DensityMatrix& rho,
                          const TolerancePolicy& tol) {
  if (k.in_dim() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Kraus input dimension " + std::to_string(k.in_dim()) +
                    " does not match state dimension " + std::to_string(rho.dim()));
  }
  if (operator_norm(k.mat()) > 1.0 + tol.rel_eps()) {
    throw Error(ErrorCode::SubnormalizationViolated,
                "Kraus operator norm exceeds 1; outcome would not be a probability");
  }
  const ComplexMatrix transformed = k.mat() * rho.mat() * k.mat().adjoint();
  return outcome_from_unnormalized(transformed, tol);
}

ApplyOutcome apply_stochastic(const StochasticChannel& channel, const DensityMatrix& rho,
                              const TolerancePolicy& tol) {
  if (channel.in_dim() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "channel input dimension " + std::to_string(channel.in_dim()) +
                    " does not match state dimension " + std::to_string(rho.dim()));
  }
  ComplexMatrix transformed = ComplexMatrix::Zero(channel.out_dim(), channel.out_dim());
  for (const KrausOperator& k : channel.elements()) {
    transformed += k.mat() * rho.mat() * k.mat().adjoint();
  }
  return outcome_from_unnormalized(transformed, tol);
}

bool is_pure_coherent_output(const DensityMatrix& rho, const TolerancePolicy& tol) {
  // For a Hermitian matrix tr(rho^2) equals the squared Frobenius norm.
  const double purity = rho.mat().squaredNorm();
  if (purity < 1.0 - tol.rel_eps()) return false;
  return !is_incoherent_state(rho, tol);
}

}  // namespace cohdist
