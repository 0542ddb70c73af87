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

#include "cohdist/distill.hpp"

#include <cmath>
#include <string>

#include "cohdist/linalg.hpp"
#include "cohdist/rng.hpp"

namespace cohdist {

namespace {

std::string one_based(const SupportSet& indices) {
  std::string out = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(indices[k] + 1);
  }
  return out + "}";
}

}  // namespace

DistillabilityReport distillability(const DensityMatrix& rho, const TolerancePolicy& tol) {
  DistillabilityReport report;
  report.decomposition = irreducible_blocks(rho, tol);

  for (const Block& block : report.decomposition.blocks) {
    BlockRankInfo info;
    info.dim = static_cast<Index>(block.indices.size());
    // A negligible-weight component carries a placeholder state; its rank
    // would be noise, so it never counts as a deficiency witness.
    info.rank = block.negligible ? info.dim : numerical_rank(block.state.mat(), tol);
    info.full_rank = info.rank >= info.dim;
    if (!info.full_rank) report.sio = true;
    report.block_ranks.push_back(info);
    if (block.negligible) {
      report.warnings.push_back("component " + one_based(block.indices) +
                                " has negligible weight; treated as full rank");
    }
  }
  report.smio = report.sio;

  report.rank_one_pairs = rank_one_coherent_pairs(rho, tol);
  report.ssio = !report.rank_one_pairs.empty();

  for (const IndexPair& p : report.decomposition.near_threshold_pairs) {
    report.warnings.push_back("off-diagonal (" + std::to_string(p.first + 1) + ", " +
                              std::to_string(p.second + 1) +
                              ") is within a factor 10 of the pattern threshold; the "
                              "block structure is fragile here");
  }
  return report;
}

bool is_distillable_sio(const DensityMatrix& rho, const TolerancePolicy& tol) {
  return distillability(rho, tol).sio;
}

bool is_distillable_smio(const DensityMatrix& rho, const TolerancePolicy& tol) {
  return distillability(rho, tol).smio;
}

bool is_distillable_ssio(const DensityMatrix& rho, const TolerancePolicy& tol) {
  return distillability(rho, tol).ssio;
}

std::vector<IndexPair> rank_one_coherent_pairs(const DensityMatrix& rho,
                                               const TolerancePolicy& tol) {
  const ComplexMatrix& m = rho.mat();
  const double scale = max_abs(m);
  const double threshold = tol.magnitude_threshold(scale);
  // Rank-one slack for the 2x2 determinant, which is quadratic in entries.
  const double det_slack = tol.rel_eps() * scale * scale;

  std::vector<IndexPair> pairs;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 1; j < m.cols(); ++j) {
      const double off = std::abs(m(i, j));
      if (off <= threshold) continue;
      if (off * off >= m(i, i).real() * m(j, j).real() - det_slack) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

DistillationWitness construct_witness(const DensityMatrix& rho, const TolerancePolicy& tol) {
  const BlockDecomposition decomposition = irreducible_blocks(rho, tol);

  const Block* source = nullptr;
  for (const Block& block : decomposition.blocks) {
    if (block.negligible) continue;
    const Index d = static_cast<Index>(block.indices.size());
    if (numerical_rank(block.state.mat(), tol) < d) {
      source = &block;
      break;
    }
  }
  if (source == nullptr) {
    throw Error(ErrorCode::NotDistillable,
                "every irreducible component has full rank; no distilling operation exists");
  }

  const ComplexMatrix kernel = kernel_basis(source->state.mat(), tol);
  if (kernel.cols() == 0) {
    throw Error(ErrorCode::WitnessVerificationFailed,
                "rank-deficient component produced an empty kernel basis");
  }

  // Embed the first kernel vector into the full space; its largest amplitude
  // is real and positive by the kernel_basis phase convention.
  const Index dim = rho.dim();
  ComplexVector psi = ComplexVector::Zero(dim);
  for (std::size_t k = 0; k < source->indices.size(); ++k) {
    psi(source->indices[k]) = kernel(static_cast<Index>(k), 0);
  }
  Index c1_index = 0;
  double c1_mag = -1.0;
  for (Index i = 0; i < dim; ++i) {
    const double mag = std::abs(psi(i));
    if (mag > c1_mag) {
      c1_mag = mag;
      c1_index = i;
    }
  }
  const Complex c1 = psi(c1_index);

  ComplexMatrix unscaled = ComplexMatrix::Zero(2, dim);
  unscaled(0, c1_index) = -c1;
  for (Index i = 0; i < dim; ++i) {
    if (i != c1_index) unscaled(1, i) = std::conj(psi(i));
  }
  const KrausOperator kraus(unscaled / operator_norm(unscaled));

  const ApplyOutcome outcome = apply_single(kraus, rho, tol);

  // The construction is only returned once its guarantees are checked
  // numerically; any failure here is an internal defect, not an input error.
  const double slack = 10.0 * tol.rel_eps();
  std::string defect;
  if (!is_incoherent_kraus(kraus, tol)) {
    defect = "operator is not incoherent";
  } else if (outcome.zero_probability()) {
    defect = "success probability is negligible";
  } else {
    const ComplexMatrix& out = outcome.state->mat();
    if (std::abs(out(0, 0).real() - 0.5) > slack || std::abs(out(1, 1).real() - 0.5) > slack ||
        std::abs(std::abs(out(0, 1)) - 0.5) > slack) {
      defect = "output is not the two-dimensional maximally coherent state";
    } else if (!is_pure_coherent_output(*outcome.state, tol)) {
      defect = "output is not pure and coherent";
    } else if (coherence_support(PureState::validated(psi, tol), tol).size() < 2) {
      defect = "kernel vector of an irreducible component is incoherent";
    }
  }
  if (!defect.empty()) {
    throw Error(ErrorCode::WitnessVerificationFailed, "witness verification: " + defect);
  }

  return DistillationWitness{kraus,    source->indices,     PureState::validated(psi, tol),
                             c1_index, outcome.probability, *outcome.state};
}

bool is_n_distillable(const DensityMatrix& rho, Index n, const TolerancePolicy& tol) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "copy count must be at least 1");
  }
  Index composite = 1;
  for (Index k = 0; k < n; ++k) {
    composite *= rho.dim();
    if (composite > 4096) {
      throw Error(ErrorCode::DimensionTooLarge,
                  "composite dimension dim^n exceeds 4096");
    }
  }
  DensityMatrix power = rho;
  for (Index k = 1; k < n; ++k) {
    power = DensityMatrix::tensor(power, rho);
  }
  return distillability(power, tol).sio;
}

std::optional<FalsificationResult> falsification_search(const DensityMatrix& rho, Index trials,
                                                        std::uint64_t seed,
                                                        const TolerancePolicy& tol) {
  if (trials < 0) {
    throw Error(ErrorCode::InvalidArgument, "trial count must be non-negative");
  }
  const Index dim = rho.dim();
  const ComplexMatrix& m = rho.mat();

  for (Index trial = 0; trial < trials; ++trial) {
    GaussianSource source(derive_seed(seed, static_cast<std::uint64_t>(trial)));

    // One non-negligible entry per column makes the operator incoherent by
    // construction.
    ComplexMatrix k = ComplexMatrix::Zero(2, dim);
    bool any = false;
    for (Index j = 0; j < dim; ++j) {
      const std::uint64_t choice = source.next_u64() % 3;
      if (choice == 2) continue;
      k(static_cast<Index>(choice), j) = source.complex_gaussian();
      any = true;
    }
    if (!any) continue;

    // Largest singular value from the 2x2 Gram matrix K K^dagger, closed form.
    double g00 = 0.0, g11 = 0.0;
    Complex g01(0.0, 0.0);
    for (Index j = 0; j < dim; ++j) {
      g00 += std::norm(k(0, j));
      g11 += std::norm(k(1, j));
      g01 += k(0, j) * std::conj(k(1, j));
    }
    const double mid = 0.5 * (g00 + g11);
    const double radius = std::sqrt(0.25 * (g00 - g11) * (g00 - g11) + std::norm(g01));
    k /= std::sqrt(mid + radius);

    // Cheap screen: renormalized K rho K^dagger must be pure and coherent.
    const ComplexMatrix transformed = k * m * k.adjoint();
    const double probability = transformed.trace().real();
    if (probability <= tol.abs_floor()) continue;
    const double d00 = transformed(0, 0).real() / probability;
    const double d11 = transformed(1, 1).real() / probability;
    const double off = std::abs(transformed(0, 1)) / probability;
    const double purity = d00 * d00 + d11 * d11 + 2.0 * off * off;
    if (purity < 1.0 - tol.rel_eps()) continue;
    if (off <= tol.magnitude_threshold(std::max({d00, d11, off}))) continue;

    // Candidate found; confirm through the validated application path.
    const KrausOperator kraus(k);
    const ApplyOutcome outcome = apply_single(kraus, rho, tol);
    if (!outcome.zero_probability() && is_incoherent_kraus(kraus, tol) &&
        is_pure_coherent_output(*outcome.state, tol)) {
      return FalsificationResult{kraus, outcome.probability};
    }
  }
  return std::nullopt;
}

}  // namespace cohdist
