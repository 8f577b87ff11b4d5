// Copyright 2026 The seedplan Authors.
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

// Command implementations behind the `seedplan` binary. Each command is a
// pure function from parsed inputs to a JSON document so it can be tested
// without spawning a process; RunCli adds argument parsing, file I/O and
// exit codes.

#ifndef SEEDPLAN_CLI_HPP_
#define SEEDPLAN_CLI_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "seedplan/config.hpp"
#include "seedplan/loadsim.hpp"
#include "seedplan/videoplan.hpp"

namespace seedplan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

// Bad flags or parameter combinations; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EntryKind { kImage, kVideo };

struct ManifestEntry {
  EntryKind kind = EntryKind::kImage;
  std::string id;
  std::int64_t native_w = 0;
  std::int64_t native_h = 0;
  double duration = 0.0;
  videoplan::TaskKind task_kind = videoplan::TaskKind::kGeneral;
  double aspect = 1.0;
};

// One JSON object per line; blank lines are skipped. Throws Error
// (kParse / kInvalidInput) whose message names the 1-based line.
std::vector<ManifestEntry> ParseManifest(std::istream& in);

nlohmann::json PlanManifest(const std::vector<ManifestEntry>& entries,
                            const PlannerConfig& config);

nlohmann::json BalancePlan(const nlohmann::json& plan, std::size_t devices,
                           std::size_t group_size,
                           const geometry::CostModel& cost);

enum class FitMode { kPowerLaw, kMetric };

// Two numeric columns under a header row.
nlohmann::json FitCsv(std::istream& csv, FitMode mode);

nlohmann::json Predict(FitMode mode, double slope, double intercept,
                       double at);

// `assignment` may be null; otherwise its device count must equal the world.
nlohmann::json SimulatePlanIo(const nlohmann::json& plan,
                              const loadsim::Topology& topology,
                              std::uint64_t bytes_per_dp_rank,
                              const nlohmann::json* assignment,
                              bool prefetch = true);

// Sorted keys, reals rounded to 9 significant digits, trailing newline.
std::string SerializeJson(const nlohmann::json& doc);

// Entry point for the binary. Never throws; failures print one JSON line
// {"error": kind, "message": text} to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace seedplan::cli

#endif  // SEEDPLAN_CLI_HPP_
