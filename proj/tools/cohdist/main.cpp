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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohdist/commands.hpp"
#include "cohdist/version.hpp"

int main(int argc, char** argv) {
  using cohdist::Index;

  CLI::App app{"cohdist: decide and construct single-shot coherence distillation"};
  app.set_version_flag("--version", cohdist::kVersion);
  app.require_subcommand(1);

  double rel_eps = 1e-9;
  double abs_floor = 1e-12;
  bool quiet = false;
  std::string output;
  std::string state_path;
  std::string channel_path;
  std::string states_path;
  std::string mode = "io";
  std::string kind;
  Index dim = 2;
  Index rank = 0;
  std::vector<Index> dims;
  std::vector<Index> ranks;
  std::uint64_t seed = 0;
  std::int64_t trials = 10000;

  const auto add_common = [&](CLI::App* sub, const char* output_help) {
    sub->add_option("--tol", rel_eps, "Relative tolerance rel_eps")
        ->capture_default_str();
    sub->add_option("--abs-floor", abs_floor, "Absolute tolerance floor")
        ->capture_default_str();
    sub->add_flag("--quiet", quiet, "Suppress the report on stdout");
    sub->add_option("--output", output, output_help);
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Distillability verdicts and block decomposition of a state file");
  analyze->add_option("state", state_path, "State file (JSON)")->required();
  add_common(analyze, "Also write the report to this path");

  CLI::App* witness = app.add_subcommand(
      "witness", "Construct a verified single-Kraus distillation protocol");
  witness->add_option("state", state_path, "State file (JSON)")->required();
  add_common(witness, "Write the witness as a channel file to this path");

  CLI::App* apply = app.add_subcommand(
      "apply", "Apply a channel file to a state file with post-selection");
  apply->add_option("channel", channel_path, "Channel file (JSON)")->required();
  apply->add_option("state", state_path, "State file (JSON)")->required();
  add_common(apply, "Also write the report to this path");

  CLI::App* distinguish = app.add_subcommand(
      "distinguish", "Discrimination protocol for a file of orthogonal pure states");
  distinguish->add_option("states", states_path, "States file (JSON)")->required();
  distinguish->add_option("--mode", mode, "Operation class: io or sio")
      ->check(CLI::IsMember({"io", "sio"}))
      ->capture_default_str();
  add_common(distinguish, "Also write the report to this path");

  CLI::App* random = app.add_subcommand(
      "random", "Write a seeded random state file and print its analysis");
  random->add_option("kind", kind, "pure, mixed, or block")
      ->required()
      ->check(CLI::IsMember({"pure", "mixed", "block"}));
  random->add_option("--dim", dim, "Dimension (pure, mixed)")->capture_default_str();
  random->add_option("--rank", rank, "Rank (mixed; defaults to dim)");
  random->add_option("--dims", dims, "Block dimensions (block)")->delimiter(',');
  random->add_option("--ranks", ranks, "Block ranks (block)")->delimiter(',');
  random->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_common(random, "State file to write (required)");

  CLI::App* falsify = app.add_subcommand(
      "falsify", "Search for a single incoherent Kraus operator distilling the state");
  falsify->add_option("state", state_path, "State file (JSON)")->required();
  falsify->add_option("--trials", trials, "Number of random trials")->capture_default_str();
  falsify->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_common(falsify, "Also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cohdist::cli::CommonOptions options;
    options.tol = cohdist::TolerancePolicy(rel_eps, abs_floor);
    if (!output.empty()) options.output_path = output;
    options.quiet = quiet;

    if (app.got_subcommand(analyze)) {
      return cohdist::cli::cmd_analyze(state_path, options, std::cout, std::cerr);
    }
    if (app.got_subcommand(witness)) {
      return cohdist::cli::cmd_witness(state_path, options, std::cout, std::cerr);
    }
    if (app.got_subcommand(apply)) {
      return cohdist::cli::cmd_apply(channel_path, state_path, options, std::cout,
                                     std::cerr);
    }
    if (app.got_subcommand(distinguish)) {
      return cohdist::cli::cmd_distinguish(states_path, mode, options, std::cout,
                                           std::cerr);
    }
    if (app.got_subcommand(random)) {
      cohdist::cli::RandomSpec spec;
      spec.kind = kind;
      spec.dim = dim;
      spec.rank = random->count("--rank") > 0 ? rank : dim;
      spec.dims = dims;
      spec.ranks = ranks;
      spec.seed = seed;
      return cohdist::cli::cmd_random(spec, options, std::cout, std::cerr);
    }
    if (app.got_subcommand(falsify)) {
      return cohdist::cli::cmd_falsify(state_path, static_cast<Index>(trials), seed,
                                       options, std::cout, std::cerr);
    }
  } catch (const cohdist::Error& e) {
    std::cerr << "error (" << cohdist::error_code_name(e.code()) << "): " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
