// Copyright 2026 The c4toric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef C4TORIC_TOOLS_CLI_HPP
#define C4TORIC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "c4toric/experiments.hpp"

namespace c4toric::cli {

struct ConfigFile {
  ExperimentConfig experiment;
  std::string out_dir = ".";
  int verbosity = 1;
};

// Parses a JSON config. Unknown keys and bad values throw InvalidParameter
// with the key in the message.
ConfigFile parse_config(std::string_view json_text);

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> out_dir;
};

int cmd_run(const std::string& config_path, const RunOverrides& overrides, std::ostream& out, std::ostream& err);
int cmd_verify(std::string_view family, int l, std::ostream& out, std::ostream& err);
int cmd_distance(std::string_view family, int l, std::size_t w_max, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace c4toric::cli

#endif  // C4TORIC_TOOLS_CLI_HPP
