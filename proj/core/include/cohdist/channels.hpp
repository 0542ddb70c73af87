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

#ifndef COHDIST_CHANNELS_HPP_
#define COHDIST_CHANNELS_HPP_

#include <optional>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/types.hpp"

namespace cohdist {

/// One Kraus element, possibly rectangular (out_dim x in_dim).
class KrausOperator {
 public:
  explicit KrausOperator(ComplexMatrix m);

  Index out_dim() const noexcept { return mat_.rows(); }
  Index in_dim() const noexcept { return mat_.cols(); }
  const ComplexMatrix& mat() const noexcept { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// An operator is incoherent when each column has at most one non-negligible
/// entry: it then maps every incoherent state to an incoherent state.
bool is_incoherent_kraus(const KrausOperator& k, const TolerancePolicy& tol = {});

/// Strictly incoherent operators additionally have at most one
/// non-negligible entry per row, so the adjoint is incoherent too.
bool is_strictly_incoherent_kraus(const KrausOperator& k, const TolerancePolicy& tol = {});

struct KrausClassification {
  bool incoherent = false;
  bool strictly_incoherent = false;
};

/// A sub-normalized Kraus set: sum_n K_n^dagger K_n <= identity within
/// tolerance. Such a set is the retained part of some completable
/// instrument; the post-selection probability on a state may be below 1.
class StochasticChannel {
 public:
  static StochasticChannel validated(std::vector<KrausOperator> elements,
                                     const TolerancePolicy& tol = {});

  const std::vector<KrausOperator>& elements() const noexcept { return elements_; }
  const std::vector<KrausClassification>& classifications() const noexcept {
    return classifications_;
  }
  Index in_dim() const noexcept { return elements_.front().in_dim(); }
  Index out_dim() const noexcept { return elements_.front().out_dim(); }

  /// Largest eigenvalue of sum_n K_n^dagger K_n (1 means trace preserving).
  double completion_bound() const noexcept { return completion_bound_; }

  bool all_incoherent() const noexcept;
  bool all_strictly_incoherent() const noexcept;

 private:
  StochasticChannel(std::vector<KrausOperator> elements,
                    std::vector<KrausClassification> classifications, double completion_bound)
      : elements_(std::move(elements)),
        classifications_(std::move(classifications)),
        completion_bound_(completion_bound) {}

  std::vector<KrausOperator> elements_;
  std::vector<KrausClassification> classifications_;
  double completion_bound_ = 0.0;
};

/// Result of a post-selected application. `state` is empty exactly when the
/// outcome probability is negligible, which is a regular outcome rather than
/// an error.
struct ApplyOutcome {
  double probability = 0.0;
  std::optional<DensityMatrix> state;

  bool zero_probability() const noexcept { return !state.has_value(); }
};

/// K rho K^dagger, renormalized; probability tr(K rho K^dagger). Requires
/// operator_norm(K) <= 1 + rel_eps so the probability is a probability.
ApplyOutcome apply_single(const KrausOperator& k, const DensityMatrix& rho,
                          const TolerancePolicy& tol = {});

/// sum_n K_n rho K_n^dagger, renormalized; probability is the trace of the sum.
ApplyOutcome apply_stochastic(const StochasticChannel& channel, const DensityMatrix& rho,
                              const TolerancePolicy& tol = {});

/// True when the state is pure (unit purity within tolerance) and not
/// incoherent, i.e. a successful distillation output.
bool is_pure_coherent_output(const DensityMatrix& rho, const TolerancePolicy& tol = {});

}  // namespace cohdist

#endif  // COHDIST_CHANNELS_HPP_
