// Copyright 2026 The Tripartite Authors
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

#ifndef TRIPARTITE_TOOLS_CLI_H_
#define TRIPARTITE_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tripartite::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Command { kReproduce, kOptimize, kLhvScan, kSample, kCorrelations };
enum class Format { kJson, kCsv, kTable };

/// Everything a run depends on. Angles are degrees unless `radians` is set.
struct RunConfig {
    Command command = Command::kReproduce;
    std::string state = "w";
    std::string state_file;
    double visibility = 1.0;
    bool radians = false;
    /// Two values (same pair for every party) or six (a, a', b, b', c, c').
    std::vector<double> pairs;
    /// Three single-setting phases for `correlations --angles`.
    std::vector<double> angles;
    std::string functional;
    std::string model;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    double grid_step = 15.0;
    double tolerance = 1e-8;
    int max_iterations = 2000;
    int restarts = 4;
    bool trace = false;
    std::string manifest;
    Format format = Format::kTable;
    std::string output;
};

/// Bad flags or arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReproduceRow {
    std::string id;
    std::string label;
    double value = 0;
    double expected = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Path of the checked-in manifest used when --manifest is not given.
std::string default_manifest_path();

/// Evaluates every manifest row. Throws UsageError on unknown ids or a
/// malformed manifest.
std::vector<ReproduceRow> reproduce(const nlohmann::json &manifest);

/// Full command-line entry point. Writes results to `out` (or --output) and
/// a JSON error object to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tripartite::cli

#endif  // TRIPARTITE_TOOLS_CLI_H_
