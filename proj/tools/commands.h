// Copyright 2026 The quditsim Authors
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

#ifndef QUDITSIM_TOOLS_COMMANDS_H
#define QUDITSIM_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace quditsim::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kRuntimeFailure = 1,
    kUsageError = 2,
};

struct CliConfig {
    std::string subcommand;
    std::string circuit_path;
    std::vector<int> d_list{3, 5, 7};
    int d = 3;
    int t = 1;
    double delta = 0.01;
    uint64_t seed = 1;
    uint64_t samples = 1;
    std::optional<int> p_override;
    std::string output_path;
    std::string format = "text";
    int threads = 1;
    bool strict = false;
    bool dense_check = false;
    bool no_timing = false;
    std::string level = "fast";
};

/// Each command writes its report to `out`, diagnostics to `err`, and returns an exit code.
int cmd_simulate(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_table(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_rank(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_check(const CliConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches. Usage errors return kUsageError.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Renders e^{2πi r/(8d²)} as ω^k when possible, otherwise e^(2πi·a/b).
std::string phase_label(int d, int64_t root_exponent);

}  // namespace quditsim::cli

#endif
