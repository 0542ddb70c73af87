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

#ifndef COHDIST_DISTINGUISH_HPP_
#define COHDIST_DISTINGUISH_HPP_

#include <optional>
#include <vector>

#include "cohdist/channels.hpp"
#include "cohdist/states.hpp"
#include "cohdist/types.hpp"

namespace cohdist {

struct LabeledMeasurement {
  Index label = 0;         // 0-based index of the state this outcome identifies
  ComplexMatrix projector; // PSD effect, here always a projector
};

/// One-shot discrimination protocol for a set of mutually orthogonal pure
/// states: `measurements` plus `residual` form a complete POVM, and `channel`
/// is a Kraus realization of the same instrument whose elements are all
/// incoherent (strictly incoherent when `strictly_incoherent` is set).
struct DiscriminationProtocol {
  std::vector<LabeledMeasurement> measurements;
  ComplexMatrix residual;
  StochasticChannel channel;
  bool strictly_incoherent = false;
};

/// Pairwise orthogonality within tolerance; equal dimensions required.
void validate_orthogonal_set(const std::vector<PureState>& states,
                             const TolerancePolicy& tol = {});

/// Discrimination by incoherent operations, which always succeeds for
/// orthogonal states: outcome n uses the projector |psi_n><psi_n| with the
/// Kraus element |n><psi_n|, incoherent because it has a single non-zero
/// row. Completion elements |n + k><chi_k| are built from an eigenbasis
/// chi_k of the residual projector, one per residual dimension, so the whole
/// instrument is trace preserving.
DiscriminationProtocol io_discrimination_protocol(const std::vector<PureState>& states,
                                                  const TolerancePolicy& tol = {});

struct SioDiscrimination {
  bool distinguishable = false;
  std::optional<DiscriminationProtocol> protocol;  // present exactly when distinguishable
};

/// Discrimination by strictly incoherent operations is possible exactly when
/// the coherence supports of the states are pairwise disjoint; the protocol
/// then measures the diagonal projectors onto those supports.
SioDiscrimination can_distinguish_sio(const std::vector<PureState>& states,
                                      const TolerancePolicy& tol = {});

/// Checks that each state is identified by the measurement carrying its
/// label with certainty and without cross-talk, all within tolerance.
bool verify_discrimination(const DiscriminationProtocol& protocol,
                           const std::vector<PureState>& states,
                           const TolerancePolicy& tol = {});

}  // namespace cohdist

#endif  // COHDIST_DISTINGUISH_HPP_
