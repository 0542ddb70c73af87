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

#include "cohdist/commands.hpp"

#include <ostream>

#include "cohdist/distill.hpp"
#include "cohdist/distinguish.hpp"
#include "cohdist/linalg.hpp"
#include "cohdist/serialize.hpp"
#include "cohdist/version.hpp"

namespace cohdist::cli {

namespace {

Json tolerance_to_json(const TolerancePolicy& tol) {
  Json j;
  j["abs_floor"] = tol.abs_floor();
  j["rel_eps"] = tol.rel_eps();
  return j;
}

Json envelope(const char* kind, const TolerancePolicy& tol) {
  Json j;
  j["kind"] = kind;
  j["version"] = kVersion;
  j["tolerance"] = tolerance_to_json(tol);
  return j;
}

void emit(const Json& report, const CommonOptions& options, std::ostream& out) {
  if (!options.quiet) out << report.dump(2) << "\n";
}

// Reports a failure as structured JSON on the error stream. Negative
// verdicts (NotDistillable) exit 1; everything else is an input error.
int failure(const Error& e, std::ostream& err) {
  Json j;
  j["kind"] = "error";
  j["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
  err << j.dump(2) << "\n";
  return e.code() == ErrorCode::NotDistillable ? 1 : 2;
}

// User-facing indices are 1-based; everything internal is 0-based.
Json one_based(const SupportSet& indices) {
  Json j = Json::array();
  for (Index i : indices) j.push_back(i + 1);
  return j;
}

Json one_based(const std::vector<IndexPair>& pairs) {
  Json j = Json::array();
  for (const IndexPair& p : pairs) j.push_back(Json::array({p.first + 1, p.second + 1}));
  return j;
}

DensityMatrix load_state(const std::string& path, const TolerancePolicy& tol,
                         std::string* digest) {
  const std::string bytes = read_file(path);
  *digest = fnv1a_digest(bytes);
  return DensityMatrix::validated(state_matrix_from_json(parse_json(bytes, path)), tol);
}

Json analysis_json(const DensityMatrix& rho, const std::string& digest,
                   const TolerancePolicy& tol) {
  const DistillabilityReport report = distillability(rho, tol);
  Json j = envelope("analysis", tol);
  j["inputs"] = Json{{"state", digest}};
  j["dim"] = rho.dim();
  j["distillable_sio"] = report.sio;
  j["distillable_smio"] = report.smio;
  j["distillable_ssio"] = report.ssio;
  Json blocks = Json::array();
  for (std::size_t k = 0; k < report.decomposition.blocks.size(); ++k) {
    const Block& block = report.decomposition.blocks[k];
    const BlockRankInfo& info = report.block_ranks[k];
    Json b;
    b["indices"] = one_based(block.indices);
    b["weight"] = block.weight;
    b["dim"] = info.dim;
    b["rank"] = info.rank;
    b["full_rank"] = info.full_rank;
    b["negligible"] = block.negligible;
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  j["rank_one_pairs"] = one_based(report.rank_one_pairs);
  j["incoherent"] = is_incoherent_state(rho, tol);
  j["coherence_rate_bits"] = distillable_coherence_asymptotic(rho, tol);
  j["warnings"] = report.warnings;
  return j;
}

void maybe_copy_report(const Json& report, const CommonOptions& options) {
  if (options.output_path) {
    write_file(*options.output_path, report.dump(2) + "\n");
  }
}

}  // namespace

int cmd_analyze(const std::string& state_path, const CommonOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    std::string digest;
    const DensityMatrix rho = load_state(state_path, options.tol, &digest);
    const Json report = analysis_json(rho, digest, options.tol);
    maybe_copy_report(report, options);
    emit(report, options, out);
    return report["distillable_sio"].get<bool>() ? 0 : 1;
  } catch (const Error& e) {
    return failure(e, err);
  }
}

int cmd_witness(const std::string& state_path, const CommonOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    std::string digest;
    const DensityMatrix rho = load_state(state_path, options.tol, &digest);

    Json report = envelope("witness", options.tol);
    report["inputs"] = Json{{"state", digest}};
    try {
      const DistillationWitness witness = construct_witness(rho, options.tol);
      report["distillable"] = true;
      report["source_block"] = one_based(witness.source_block);
      report["kernel_vector"] = vector_to_json(witness.kernel_vector.amplitudes());
      report["c1_index"] = witness.c1_index + 1;
      report["probability"] = witness.probability;
      report["kraus"] = matrix_to_json(witness.kraus.mat());
      report["output_state"] = matrix_to_json(witness.output.mat());
      Json checks;
      checks["incoherent_kraus"] = is_incoherent_kraus(witness.kraus, options.tol);
      checks["strictly_incoherent_kraus"] =
          is_strictly_incoherent_kraus(witness.kraus, options.tol);
      checks["operator_norm"] = operator_norm(witness.kraus.mat());
      checks["output_purity"] = witness.output.mat().squaredNorm();
      checks["output_pure_coherent"] = is_pure_coherent_output(witness.output, options.tol);
      report["checks"] = std::move(checks);
      if (options.output_path) {
        const Json channel = channel_to_json({witness.kraus});
        write_file(*options.output_path, channel.dump(2) + "\n");
        report["channel_written"] = *options.output_path;
      } else {
        report["channel_written"] = nullptr;
      }
      emit(report, options, out);
      return 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDistillable) throw;
      report["distillable"] = false;
      report["reason"] = e.what();
      emit(report, options, out);
      return 1;
    }
  } catch (const Error& e) {
    return failure(e, err);
  }
}

int cmd_apply(const std::string& channel_path, const std::string& state_path,
              const CommonOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const std::string channel_bytes = read_file(channel_path);
    std::vector<ComplexMatrix> matrices =
        kraus_list_from_json(parse_json(channel_bytes, channel_path));
    std::vector<KrausOperator> elements;
    elements.reserve(matrices.size());
    for (ComplexMatrix& m : matrices) elements.emplace_back(std::move(m));
    const StochasticChannel channel =
        StochasticChannel::validated(std::move(elements), options.tol);

    std::string state_digest;
    const DensityMatrix rho = load_state(state_path, options.tol, &state_digest);
    const ApplyOutcome outcome = apply_stochastic(channel, rho, options.tol);

    Json report = envelope("apply", options.tol);
    report["inputs"] =
        Json{{"channel", fnv1a_digest(channel_bytes)}, {"state", state_digest}};
    report["probability"] = outcome.probability;
    report["zero_probability"] = outcome.zero_probability();
    report["all_kraus_incoherent"] = channel.all_incoherent();
    report["all_kraus_strictly_incoherent"] = channel.all_strictly_incoherent();
    if (outcome.zero_probability()) {
      report["output_state"] = nullptr;
      report["output_purity"] = nullptr;
      report["output_pure_coherent"] = false;
      maybe_copy_report(report, options);
      emit(report, options, out);
      return 3;
    }
    report["output_state"] = matrix_to_json(outcome.state->mat());
    report["output_purity"] = outcome.state->mat().squaredNorm();
    report["output_pure_coherent"] = is_pure_coherent_output(*outcome.state, options.tol);
    maybe_copy_report(report, options);
    emit(report, options, out);
    return 0;
  } catch (const Error& e) {
    return failure(e, err);
  }
}

namespace {

Json protocol_to_json(const DiscriminationProtocol& protocol) {
  Json measurements = Json::array();
  for (const LabeledMeasurement& m : protocol.measurements) {
    Json entry;
    entry["label"] = m.label + 1;
    entry["projector"] = matrix_to_json(m.projector);
    measurements.push_back(std::move(entry));
  }
  Json kraus = Json::array();
  for (const KrausOperator& k : protocol.channel.elements()) {
    kraus.push_back(matrix_to_json(k.mat()));
  }
  Json j;
  j["measurements"] = std::move(measurements);
  j["residual"] = matrix_to_json(protocol.residual);
  j["kraus"] = std::move(kraus);
  j["strictly_incoherent"] = protocol.strictly_incoherent;
  return j;
}

}  // namespace

int cmd_distinguish(const std::string& states_path, const std::string& mode,
                    const CommonOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (mode != "io" && mode != "sio") {
      throw Error(ErrorCode::InvalidArgument, "mode must be 'io' or 'sio'");
    }
    const std::string bytes = read_file(states_path);
    std::vector<ComplexVector> amplitudes =
        states_list_from_json(parse_json(bytes, states_path));
    std::vector<PureState> states;
    states.reserve(amplitudes.size());
    for (const ComplexVector& v : amplitudes) {
      states.push_back(PureState::validated(v, options.tol));
    }

    Json report = envelope("distinguish", options.tol);
    report["inputs"] = Json{{"states", fnv1a_digest(bytes)}};
    report["mode"] = mode;

    if (mode == "io") {
      const DiscriminationProtocol protocol =
          io_discrimination_protocol(states, options.tol);
      const bool verified = verify_discrimination(protocol, states, options.tol);
      report["distinguishable"] = true;
      report["protocol"] = protocol_to_json(protocol);
      report["verified"] = verified;
      maybe_copy_report(report, options);
      emit(report, options, out);
      return verified ? 0 : 1;
    }

    const SioDiscrimination result = can_distinguish_sio(states, options.tol);
    report["distinguishable"] = result.distinguishable;
    if (result.distinguishable) {
      const bool verified = verify_discrimination(*result.protocol, states, options.tol);
      report["protocol"] = protocol_to_json(*result.protocol);
      report["verified"] = verified;
      maybe_copy_report(report, options);
      emit(report, options, out);
      return verified ? 0 : 1;
    }
    report["protocol"] = nullptr;
    report["verified"] = false;
    maybe_copy_report(report, options);
    emit(report, options, out);
    return 1;
  } catch (const Error& e) {
    return failure(e, err);
  }
}

int cmd_random(const RandomSpec& spec, const CommonOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    if (!options.output_path) {
      throw Error(ErrorCode::InvalidArgument, "random requires --output <path>");
    }
    Json generated;
    generated["kind"] = spec.kind;
    generated["seed"] = spec.seed;

    DensityMatrix rho = [&] {
      if (spec.kind == "pure") {
        generated["dim"] = spec.dim;
        // Drawn through the block path so connectivity is enforced by
        // rejection; a rank-1 irreducible draw is exactly a coherent pure state.
        return random_block_state({spec.dim}, {1}, spec.seed, options.tol);
      }
      if (spec.kind == "mixed") {
        generated["dim"] = spec.dim;
        generated["rank"] = spec.rank;
        return random_density(spec.dim, spec.rank, spec.seed);
      }
      if (spec.kind == "block") {
        generated["dims"] = spec.dims;
        generated["ranks"] = spec.ranks;
        return random_block_state(spec.dims, spec.ranks, spec.seed, options.tol);
      }
      throw Error(ErrorCode::InvalidArgument, "kind must be 'pure', 'mixed' or 'block'");
    }();

    const std::string bytes = state_to_json(rho.mat()).dump(2) + "\n";
    write_file(*options.output_path, bytes);
    generated["path"] = *options.output_path;

    Json report = envelope("random", options.tol);
    report["generated"] = std::move(generated);
    report["analysis"] = analysis_json(rho, fnv1a_digest(bytes), options.tol);
    emit(report, options, out);
    return 0;
  } catch (const Error& e) {
    return failure(e, err);
  }
}

int cmd_falsify(const std::string& state_path, Index trials, std::uint64_t seed,
                const CommonOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::string digest;
    const DensityMatrix rho = load_state(state_path, options.tol, &digest);
    const std::optional<FalsificationResult> result =
        falsification_search(rho, trials, seed, options.tol);

    Json report = envelope("falsify", options.tol);
    report["inputs"] = Json{{"state", digest}};
    report["trials"] = trials;
    report["seed"] = seed;
    report["found"] = result.has_value();
    if (result) {
      report["kraus"] = matrix_to_json(result->kraus.mat());
      report["probability"] = result->probability;
    } else {
      report["kraus"] = nullptr;
      report["probability"] = nullptr;
    }
    maybe_copy_report(report, options);
    emit(report, options, out);
    return result ? 0 : 1;
  } catch (const Error& e) {
    return failure(e, err);
  }
}

}  // namespace cohdist::cli
