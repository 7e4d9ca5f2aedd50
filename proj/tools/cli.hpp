// Copyright 2026 The vesopt Authors. All Rights Reserved.
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
// =============================================================================

#ifndef VESOPT_TOOLS_CLI_HPP
#define VESOPT_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vesopt/bench.hpp"

namespace vesopt::cli {

enum class Subcommand { run, bench, dump_acq, dump_samples, list_objectives };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitCompute = 4;

struct Invocation {
  Subcommand command = Subcommand::bench;
  ExperimentConfig config;
  std::vector<std::string> objectives = {"himmelblau"};
  std::vector<Acquisition> acquisitions = {Acquisition::ei};
  std::filesystem::path out = ".";
  std::optional<std::filesystem::path> config_path;
  std::optional<std::filesystem::path> data_path;
  std::optional<std::vector<double>> x;
  bool ves_trace = false;
};

/// "101x101" -> {101, 101}; a bare "101" is one-dimensional.
std::vector<int> parse_resolution(const std::string& text, const std::string& field);

/// Overlays the snake_case fields of j onto inv. Unknown or mistyped fields
/// throw ConfigError naming the field.
void apply_config_json(const nlohmann::json& j, Invocation& inv);

/// Effective configuration in the same schema apply_config_json reads.
nlohmann::json config_to_json(const Invocation& inv);

/// Defaults <- JSON config file <- flags. Throws CLI::ParseError for bad
/// syntax, ConfigError for invalid values, IoError for an unreadable config.
Invocation parse(int argc, const char* const* argv);

int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse + execute with errors mapped to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vesopt::cli

#endif  // VESOPT_TOOLS_CLI_HPP
