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

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "seedplan/cli.hpp"
#include "seedplan/error.hpp"

namespace seedplan::cli {

using nlohmann::json;

namespace {

// Failure to read or write a named file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

json ReadJsonFile(const std::string& path) {
  auto in = OpenInput(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    throw IoError("cannot write '" + path + "'");
  }
}

void Report(std::ostream& err, std::string_view kind, std::string_view message) {
  json line = {{"error", kind}, {"message", message}};
  err << line.dump() << "\n";
}

FitMode ParseMode(const std::string& mode) {
  if (mode == "power_law") return FitMode::kPowerLaw;
  if (mode == "metric") return FitMode::kMetric;
  throw UsageError("--mode must be power_law or metric, got '" + mode + "'");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Token, packing, balancing and scaling planner for "
               "native-resolution vision-language training",
               "seedplan"};
  app.require_subcommand(1);

  std::string out_path;
  std::string config_path;

  // plan
  std::string manifest_path;
  std::optional<std::int64_t> budget;
  std::optional<std::int64_t> max_len;
  auto* plan_cmd = app.add_subcommand(
      "plan", "Plan images and videos from a JSONL manifest and pack them");
  plan_cmd->add_option("--manifest", manifest_path, "JSONL manifest")->required();
  plan_cmd->add_option("--budget", budget, "Token budget per video");
  plan_cmd->add_option("--max-len", max_len, "Packed sequence capacity");
  plan_cmd->add_option("--config", config_path, "Config file");
  plan_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  // balance
  std::string plan_path;
  std::size_t devices = 0;
  std::optional<std::size_t> group_size;
  std::optional<double> cost_alpha;
  std::optional<double> cost_beta;
  auto* balance_cmd = app.add_subcommand(
      "balance", "Assign plan items to devices by estimated FLOPS");
  balance_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
  balance_cmd->add_option("--devices", devices, "Device count")->required();
  balance_cmd->add_option("--group-size", group_size,
                          "Devices per balancing group (default: all)");
  balance_cmd->add_option("--cost-alpha", cost_alpha, "FLOPS per patch");
  balance_cmd->add_option("--cost-beta", cost_beta, "FLOPS per patch pair");
  balance_cmd->add_option("--config", config_path, "Config file");
  balance_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  // fit
  std::string csv_path;
  std::string mode = "power_law";
  auto* fit_cmd = app.add_subcommand(
      "fit", "Least-squares fit of a power law or a loss-to-metric line");
  fit_cmd->add_option("--csv", csv_path, "Two-column CSV with header")
      ->required();
  fit_cmd->add_option("--mode", mode, "power_law | metric");
  fit_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  // predict
  double slope = 0.0;
  double intercept = 0.0;
  double at = 0.0;
  auto* predict_cmd = app.add_subcommand(
      "predict", "Evaluate a fitted line at a token count or loss");
  predict_cmd->add_option("--mode", mode, "power_law | metric");
  predict_cmd->add_option("--slope", slope, "Fitted slope")->required();
  predict_cmd->add_option("--intercept", intercept, "Fitted intercept")
      ->required();
  predict_cmd->add_option("--at", at, "Training tokens or loss")->required();
  predict_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  // simulate-io
  loadsim::Topology topology;
  std::uint64_t bytes_per_rank = 0;
  std::string assignment_path;
  bool no_prefetch = false;
  auto* io_cmd = app.add_subcommand(
      "simulate-io", "Byte accounting for single-reader data loading");
  io_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
  io_cmd->add_option("--dp", topology.dp, "Data-parallel width");
  io_cmd->add_option("--pp", topology.pp, "Pipeline-parallel depth");
  io_cmd->add_option("--tp", topology.tp, "Tensor-parallel width");
  io_cmd->add_option("--bytes-per-rank", bytes_per_rank,
                     "Bytes each data-parallel replica consumes");
  io_cmd->add_option("--assignment", assignment_path,
                     "Balance output used as the image partition");
  io_cmd->add_flag("--no-prefetch", no_prefetch,
                   "Report loading as not overlapped with compute");
  io_cmd->add_option("--out", out_path, "Output JSON (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Report(err, "usage_error", e.what());
    return kExitUsage;
  }

  try {
    PlannerConfig config;
    if (!config_path.empty()) {
      try {
        config = LoadConfig(config_path);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }

    std::string text;
    if (plan_cmd->parsed()) {
      if (budget) config.policy.budget = *budget;
      if (max_len) config.max_len = *max_len;
      if (config.max_len < 1) throw UsageError("--max-len must be >= 1");
      try {
        config.policy.Validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      auto in = OpenInput(manifest_path);
      text = SerializeJson(PlanManifest(ParseManifest(in), config));
    } else if (balance_cmd->parsed()) {
      if (cost_alpha) config.cost.alpha = *cost_alpha;
      if (cost_beta) config.cost.beta = *cost_beta;
      const std::size_t group = group_size.value_or(devices);
      if (devices == 0) throw UsageError("--devices must be >= 1");
      if (group == 0 || devices % group != 0) {
        throw UsageError("--group-size " + std::to_string(group) +
                         " must divide --devices " + std::to_string(devices));
      }
      try {
        config.cost.Validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const json plan = ReadJsonFile(plan_path);
      text = SerializeJson(BalancePlan(plan, devices, group, config.cost));
    } else if (fit_cmd->parsed()) {
      const FitMode m = ParseMode(mode);
      auto in = OpenInput(csv_path);
      text = SerializeJson(FitCsv(in, m));
    } else if (predict_cmd->parsed()) {
      text = SerializeJson(Predict(ParseMode(mode), slope, intercept, at));
    } else if (io_cmd->parsed()) {
      try {
        topology.Validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const json plan = ReadJsonFile(plan_path);
      std::optional<json> assignment;
      if (!assignment_path.empty()) assignment = ReadJsonFile(assignment_path);
      text = SerializeJson(SimulatePlanIo(
          plan, topology, bytes_per_rank,
          assignment ? &*assignment : nullptr, !no_prefetch));
    }
    WriteOutput(out_path, text, out);
    return kExitOk;
  } catch (const UsageError& e) {
    Report(err, "usage_error", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    Report(err, ErrorKindName(e.kind()), e.what());
    return kExitData;
  } catch (const IoError& e) {
    Report(err, "io_error", e.what());
    return kExitData;
  } catch (const json::exception& e) {
    Report(err, "schema_error", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    Report(err, "internal_error", e.what());
    return kExitData;
  }
}

}  // namespace seedplan::cli
