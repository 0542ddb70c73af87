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

#include "cohdist/types.hpp"

#include <algorithm>
#include <cmath>

namespace cohdist {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SubnormalizationViolated: return "SubnormalizationViolated";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotDistillable: return "NotDistillable";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

TolerancePolicy::TolerancePolicy(double rel_eps, double abs_floor)
    : rel_eps_(rel_eps), abs_floor_(abs_floor) {
  if (!std::isfinite(rel_eps) || rel_eps <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "rel_eps must be finite and positive");
  }
  if (!std::isfinite(abs_floor) || abs_floor <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "abs_floor must be finite and positive");
  }
}

double TolerancePolicy::magnitude_threshold(double scale) const noexcept {
  return std::max(rel_eps_ * scale, abs_floor_);
}

bool all_finite(const ComplexMatrix& m) noexcept {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& m) noexcept {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

}  // namespace cohdist
