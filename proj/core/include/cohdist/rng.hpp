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

#ifndef COHDIST_RNG_HPP_
#define COHDIST_RNG_HPP_

#include <cstdint>
#include <random>

#include "cohdist/types.hpp"

namespace cohdist {

/// Deterministic random source. std::mt19937_64 produces an identical bit
/// stream everywhere; the uniform and Gaussian transforms below are written
/// out instead of using std::*_distribution, whose output is
/// implementation-defined and would break cross-platform reproducibility.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via the Box-Muller transform (pairs are cached).
  double gaussian();

  /// Real and imaginary parts are independent standard normals.
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Stable per-subtask seed derivation (splitmix64 mixing), so that trial k of
/// a search depends only on (seed, k) and not on how earlier trials consumed
/// the stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace cohdist

#endif  // COHDIST_RNG_HPP_
