// Copyright 2026 The martight Authors
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

#ifndef MARTIGHT_TOOLS_CLI_HPP_
#define MARTIGHT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "martight/asymptotics.hpp"

namespace martight::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kOracleDisagreement = 1,
  kUsage = 2,
  kResource = 3,
  kIo = 4,
};

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics to `err`. Never throws; every failure maps to an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// printf("%.9g"); the CSV number format.
std::string format_csv_number(double value);

// Header plus one LF-terminated row per sample, clamped to [0, 1] if asked.
std::string render_sweep_csv(const std::vector<AsymptoticSample>& rows, bool clamp);

}  // namespace martight::cli

#endif  // MARTIGHT_TOOLS_CLI_HPP_
