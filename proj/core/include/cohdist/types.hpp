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

#ifndef COHDIST_TYPES_HPP_
#define COHDIST_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace cohdist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexPair = std::pair<Index, Index>;

/// Failure categories surfaced by the library. The CLI maps these onto its
/// error reports and exit codes, so names are stable API.
enum class ErrorCode {
  InvalidArgument,
  NotSquare,
  NotFinite,
  NotHermitian,
  NotPsd,
  TraceNotOne,
  NotNormalized,
  DimensionMismatch,
  SubnormalizationViolated,
  NotOrthogonal,
  NotDistillable,
  DimensionTooLarge,
  WitnessVerificationFailed,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Every numerical judgement in the library (rank cutoffs, zero tests,
/// validation slack) derives from one policy so that results are reproducible
/// and tunable in one place. `rel_eps` scales with the data; `abs_floor`
/// keeps thresholds meaningful when the data itself is almost zero.
class TolerancePolicy {
 public:
  TolerancePolicy() = default;

  TolerancePolicy(double rel_eps, double abs_floor);

  double rel_eps() const noexcept { return rel_eps_; }
  double abs_floor() const noexcept { return abs_floor_; }

  /// Magnitudes at or below max(rel_eps * scale, abs_floor) are treated as
  /// zero relative to a problem-specific `scale` (largest entry, largest
  /// singular value, ...).
  double magnitude_threshold(double scale) const noexcept;

 private:
  double rel_eps_ = 1e-9;
  double abs_floor_ = 1e-12;
};

bool all_finite(const ComplexMatrix& m) noexcept;

/// Largest entry magnitude; 0 for empty matrices.
double max_abs(const ComplexMatrix& m) noexcept;

}  // namespace cohdist

#endif  // COHDIST_TYPES_HPP_
