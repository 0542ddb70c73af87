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

#include "cohdist/distinguish.hpp"

#include <cmath>
#include <string>

#include "cohdist/linalg.hpp"

namespace cohdist {

void validate_orthogonal_set(const std::vector<PureState>& states,
                             const TolerancePolicy& tol) {
  if (states.empty()) {
    throw Error(ErrorCode::InvalidArgument, "state set must be non-empty");
  }
  const Index dim = states.front().dim();
  for (const PureState& s : states) {
    if (s.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "states have mixed dimensions");
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double overlap =
          std::abs(states[i].amplitudes().dot(states[j].amplitudes()));
      if (overlap > tol.rel_eps()) {
        throw Error(ErrorCode::NotOrthogonal,
                    "states " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " overlap: |<psi_i|psi_j>| = " + std::to_string(overlap));
      }
    }
  }
}

DiscriminationProtocol io_discrimination_protocol(const std::vector<PureState>& states,
                                                  const TolerancePolicy& tol) {
  validate_orthogonal_set(states, tol);
  const Index dim = states.front().dim();
  const Index count = static_cast<Index>(states.size());

  std::vector<LabeledMeasurement> measurements;
  measurements.reserve(states.size());
  std::vector<KrausOperator> elements;
  ComplexMatrix used = ComplexMatrix::Zero(dim, dim);
  for (Index n = 0; n < count; ++n) {
    const ComplexVector& psi = states[static_cast<std::size_t>(n)].amplitudes();
    const ComplexMatrix projector = psi * psi.adjoint();
    measurements.push_back(LabeledMeasurement{n, projector});
    used += projector;
    ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
    k.row(n) = psi.adjoint();
    elements.emplace_back(std::move(k));
  }

  const ComplexMatrix residual = ComplexMatrix::Identity(dim, dim) - used;

  // The residual of an orthonormal family is itself a projector; its
  // eigenvalues cluster at 0 and 1, so 1/2 separates them safely. One
  // single-row Kraus element per residual direction completes the channel.
  const EigenDecomposition eig = hermitian_eig(residual, tol);
  Index next_row = count;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues(k) <= 0.5) continue;
    if (next_row >= dim) {
      throw Error(ErrorCode::InvalidArgument,
                  "residual rank exceeds the unused output rows; the input set was "
                  "not orthonormal");
    }
    ComplexMatrix element = ComplexMatrix::Zero(dim, dim);
    element.row(next_row) = eig.eigenvectors.col(k).adjoint();
    elements.emplace_back(std::move(element));
    ++next_row;
  }

  StochasticChannel channel = StochasticChannel::validated(std::move(elements), tol);
  const bool strict = channel.all_strictly_incoherent();
  return DiscriminationProtocol{std::move(measurements), residual, std::move(channel),
                                strict};
}

SioDiscrimination can_distinguish_sio(const std::vector<PureState>& states,
                                      const TolerancePolicy& tol) {
  validate_orthogonal_set(states, tol);
  const Index dim = states.front().dim();
  const Index count = static_cast<Index>(states.size());

  std::vector<SupportSet> supports;
  supports.reserve(states.size());
  std::vector<Index> owner(static_cast<std::size_t>(dim), -1);
  for (Index n = 0; n < count; ++n) {
    supports.push_back(coherence_support(states[static_cast<std::size_t>(n)], tol));
    for (Index i : supports.back()) {
      if (owner[static_cast<std::size_t>(i)] >= 0) {
        return SioDiscrimination{false, std::nullopt};
      }
      owner[static_cast<std::size_t>(i)] = n;
    }
  }

  // Disjoint supports: measuring the diagonal projectors onto the supports
  // identifies the state, and the projectors are their own strictly
  // incoherent Kraus elements.
  std::vector<LabeledMeasurement> measurements;
  std::vector<KrausOperator> elements;
  for (Index n = 0; n < count; ++n) {
    ComplexMatrix projector = ComplexMatrix::Zero(dim, dim);
    for (Index i : supports[static_cast<std::size_t>(n)]) {
      projector(i, i) = Complex(1.0, 0.0);
    }
    measurements.push_back(LabeledMeasurement{n, projector});
    elements.emplace_back(projector);
  }
  ComplexMatrix residual = ComplexMatrix::Zero(dim, dim);
  bool residual_nonzero = false;
  for (Index i = 0; i < dim; ++i) {
    if (owner[static_cast<std::size_t>(i)] < 0) {
      residual(i, i) = Complex(1.0, 0.0);
      residual_nonzero = true;
    }
  }
  if (residual_nonzero) elements.emplace_back(residual);

  StochasticChannel channel = StochasticChannel::validated(std::move(elements), tol);
  const bool strict = channel.all_strictly_incoherent();
  return SioDiscrimination{
      true, DiscriminationProtocol{std::move(measurements), std::move(residual),
                                   std::move(channel), strict}};
}

bool verify_discrimination(const DiscriminationProtocol& protocol,
                           const std::vector<PureState>& states,
                           const TolerancePolicy& tol) {
  if (states.empty()) return false;
  const Index dim = states.front().dim();
  for (const LabeledMeasurement& m : protocol.measurements) {
    if (m.projector.rows() != dim || m.projector.cols() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "measurement dimension does not match the states");
    }
  }

  // Each state must be claimed by exactly one label, fire that measurement
  // with certainty, and never fire a measurement labeled for another state.
  std::vector<int> claimed(states.size(), 0);
  for (const LabeledMeasurement& m : protocol.measurements) {
    if (m.label < 0 || m.label >= static_cast<Index>(states.size())) return false;
    ++claimed[static_cast<std::size_t>(m.label)];
    for (std::size_t j = 0; j < states.size(); ++j) {
      const ComplexVector& psi = states[j].amplitudes();
      const double response = (psi.adjoint() * m.projector * psi)(0, 0).real();
      if (static_cast<Index>(j) == m.label) {
        if (response < 1.0 - tol.rel_eps()) return false;
      } else {
        if (response > tol.rel_eps()) return false;
      }
    }
  }
  for (int c : claimed) {
    if (c != 1) return false;
  }
  return true;
}

}  // namespace cohdist
