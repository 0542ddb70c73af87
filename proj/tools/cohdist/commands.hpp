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

#ifndef COHDIST_CLI_COMMANDS_HPP_
#define COHDIST_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cohdist/types.hpp"

namespace cohdist::cli {

/// Exit codes shared by all subcommands:
///   0 affirmative (distillable / distinguishable / witness found / done)
///   1 negative verdict (not distillable, no SIO protocol, nothing found)
///   2 input or usage error (I/O, parse, validation)
///   3 zero-probability outcome (apply only)
struct CommonOptions {
  TolerancePolicy tol;
  std::optional<std::string> output_path;
  bool quiet = false;
};

int cmd_analyze(const std::string& state_path, const CommonOptions& options,
                std::ostream& out, std::ostream& err);

int cmd_witness(const std::string& state_path, const CommonOptions& options,
                std::ostream& out, std::ostream& err);

int cmd_apply(const std::string& channel_path, const std::string& state_path,
              const CommonOptions& options, std::ostream& out, std::ostream& err);

int cmd_distinguish(const std::string& states_path, const std::string& mode,
                    const CommonOptions& options, std::ostream& out, std::ostream& err);

struct RandomSpec {
  std::string kind;           // "pure" | "mixed" | "block"
  Index dim = 2;              // pure / mixed
  Index rank = 1;             // mixed
  std::vector<Index> dims;    // block
  std::vector<Index> ranks;   // block
  std::uint64_t seed = 0;
};

int cmd_random(const RandomSpec& spec, const CommonOptions& options, std::ostream& out,
               std::ostream& err);

int cmd_falsify(const std::string& state_path, Index trials, std::uint64_t seed,
                const CommonOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cohdist::cli

#endif  // COHDIST_CLI_COMMANDS_HPP_
