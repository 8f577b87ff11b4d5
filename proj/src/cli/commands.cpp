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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string_view>

#include "seedplan/balancer.hpp"
#include "seedplan/cli.hpp"
#include "seedplan/error.hpp"
#include "seedplan/geometry.hpp"
#include "seedplan/packer.hpp"
#include "seedplan/scaling.hpp"

namespace seedplan::cli {

using nlohmann::json;

namespace {

[[noreturn]] void LineError(ErrorKind kind, std::string_view source, int line,
                            const std::string& what) {
  throw Error(kind, std::string(source) + " line " + std::to_string(line) +
                        ": " + what);
}

std::string IdOf(const json& value, int line) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  LineError(ErrorKind::kInvalidInput, "manifest", line,
            "'id' must be a string or an integer");
}

std::int64_t PositiveInt(const json& obj, const char* key, int line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() ||
      it->get<std::int64_t>() < 1) {
    LineError(ErrorKind::kInvalidInput, "manifest", line,
              std::string("'") + key + "' must be a positive integer");
  }
  return it->get<std::int64_t>();
}

double PositiveReal(const json& obj, const char* key, int line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number() || !(it->get<double>() > 0.0) ||
      !std::isfinite(it->get<double>())) {
    LineError(ErrorKind::kInvalidInput, "manifest", line,
              std::string("'") + key + "' must be a positive number");
  }
  return it->get<double>();
}

struct FrameSpec {
  std::string id;
  std::int64_t tokens = 0;
  std::int64_t patches = 0;
  std::uint64_t bytes = 0;
};

// Flattens plan entries into encoder inputs: one per image, one per
// selected video frame.
std::vector<FrameSpec> EncoderInputs(const json& plan) {
  std::vector<FrameSpec> out;
  for (const auto& e : plan.at("entries")) {
    const auto kind = e.at("kind").get<std::string>();
    const auto id = e.at("id").get<std::string>();
    if (kind == "image") {
      out.push_back(FrameSpec{
          id, e.at("token_count").get<std::int64_t>(),
          e.at("patch_count").get<std::int64_t>(),
          static_cast<std::uint64_t>(e.at("native_w").get<std::int64_t>() *
                                     e.at("native_h").get<std::int64_t>() * 3)});
    } else if (kind == "video") {
      const auto count = e.at("frame_count").get<std::int64_t>();
      const auto tokens = e.at("frame_tokens").get<std::int64_t>();
      const auto patches = e.at("frame_patches").get<std::int64_t>();
      const auto bytes = static_cast<std::uint64_t>(
          e.at("frame_w").get<std::int64_t>() *
          e.at("frame_h").get<std::int64_t>() * 3);
      for (std::int64_t k = 0; k < count; ++k) {
        out.push_back(FrameSpec{id + "/" + std::to_string(k), tokens, patches,
                                bytes});
      }
    } else {
      throw Error(ErrorKind::kInvalidInput,
                  "plan entry '" + id + "' has unknown kind '" + kind + "'");
    }
  }
  return out;
}

double RoundSignificant(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

void RoundReals(json& node) {
  if (node.is_number_float()) {
    node = RoundSignificant(node.get<double>());
  } else if (node.is_structured()) {
    for (auto& child : node) RoundReals(child);
  }
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double CsvNumber(std::string_view field, int line) {
  field = Trim(field);
  double v = 0.0;
  const auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() ||
      end != field.data() + field.size() || !std::isfinite(v)) {
    LineError(ErrorKind::kParse, "csv", line,
              "'" + std::string(field) + "' is not a finite number");
  }
  return v;
}

}  // namespace

std::vector<ManifestEntry> ParseManifest(std::istream& in) {
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (Trim(raw).empty()) continue;
    json obj;
    try {
      obj = json::parse(raw);
    } catch (const json::parse_error& e) {
      LineError(ErrorKind::kParse, "manifest", line,
                "malformed JSON (" + std::string(e.what()) + ")");
    }
    if (!obj.is_object()) {
      LineError(ErrorKind::kParse, "manifest", line, "expected a JSON object");
    }
    if (!obj.contains("id")) {
      LineError(ErrorKind::kInvalidInput, "manifest", line, "missing 'id'");
    }
    ManifestEntry entry;
    entry.id = IdOf(obj["id"], line);
    if (!seen.insert(entry.id).second) {
      LineError(ErrorKind::kInvalidInput, "manifest", line,
                "duplicate id '" + entry.id + "'");
    }
    const std::string kind =
        obj.contains("kind") && obj["kind"].is_string() ? obj["kind"].get<std::string>() : "";
    if (kind == "image") {
      entry.kind = EntryKind::kImage;
      entry.native_w = PositiveInt(obj, "native_w", line);
      entry.native_h = PositiveInt(obj, "native_h", line);
    } else if (kind == "video") {
      entry.kind = EntryKind::kVideo;
      entry.duration = PositiveReal(obj, "duration", line);
      if (obj.contains("task_kind")) {
        if (!obj["task_kind"].is_string()) {
          LineError(ErrorKind::kInvalidInput, "manifest", line,
                    "'task_kind' must be a string");
        }
        try {
          entry.task_kind =
              videoplan::ParseTaskKind(obj["task_kind"].get<std::string>());
        } catch (const Error& e) {
          LineError(ErrorKind::kInvalidInput, "manifest", line, e.what());
        }
      }
      if (obj.contains("aspect")) entry.aspect = PositiveReal(obj, "aspect", line);
    } else {
      LineError(ErrorKind::kInvalidInput, "manifest", line,
                "'kind' must be \"image\" or \"video\"");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

json PlanManifest(const std::vector<ManifestEntry>& entries,
                  const PlannerConfig& config) {
  config.policy.Validate();
  json doc;
  doc["config"] = {{"budget", config.policy.budget},
                   {"levels", config.policy.levels},
                   {"max_len", config.max_len}};
  doc["entries"] = json::array();

  std::vector<packer::PackItem> pack_items;
  for (const auto& entry : entries) {
    json e;
    e["id"] = entry.id;
    if (entry.kind == EntryKind::kImage) {
      const auto p = geometry::PlanImage(entry.native_w, entry.native_h);
      e["kind"] = "image";
      e["native_w"] = p.native_w;
      e["native_h"] = p.native_h;
      e["target_w"] = p.target_w;
      e["target_h"] = p.target_h;
      e["patch_grid_w"] = p.patch_grid_w;
      e["patch_grid_h"] = p.patch_grid_h;
      e["patch_count"] = p.patch_count;
      e["token_count"] = p.token_count;
      pack_items.push_back({entry.id, p.token_count});
    } else {
      const double fps = videoplan::ChooseFps(entry.task_kind, config.policy);
      const auto v = videoplan::PlanVideo(entry.duration, fps, config.policy);
      const auto dims = videoplan::LevelToDims(v.level, entry.aspect);
      const std::int64_t grid_w = dims.w / geometry::kSnapMultiple;
      const std::int64_t grid_h = dims.h / geometry::kSnapMultiple;
      e["kind"] = "video";
      e["duration"] = entry.duration;
      e["task_kind"] = videoplan::TaskKindName(entry.task_kind);
      e["aspect"] = entry.aspect;
      e["fps"] = fps;
      e["nominal_frames"] = v.nominal_frames;
      e["frame_count"] = v.frame_count();
      e["level"] = v.level;
      e["total_tokens"] = v.total_tokens;
      e["fallback_applied"] = v.fallback_applied;
      e["frame_w"] = dims.w;
      e["frame_h"] = dims.h;
      e["frame_tokens"] = grid_w * grid_h;
      e["frame_patches"] = grid_w * grid_h * 4;
      e["frame_indices"] = v.frame_indices;
      e["frame_times"] = v.frame_times;
      json stamps = json::array();
      for (double t : v.frame_times) {
        stamps.push_back(videoplan::TimestampToken(t));
      }
      e["timestamps"] = std::move(stamps);
      for (std::int64_t k = 0; k < v.frame_count(); ++k) {
        pack_items.push_back(
            {entry.id + "/" + std::to_string(k), grid_w * grid_h});
      }
    }
    doc["entries"].push_back(std::move(e));
  }

  const auto pack = packer::PackFfd(pack_items, config.max_len);
  json bins = json::array();
  for (std::size_t b = 0; b < pack.bins.size(); ++b) {
    json items = json::array();
    for (const auto& item : pack.bins[b].items) {
      items.push_back({{"id", item.id}, {"length", item.length}});
    }
    bins.push_back({{"items", std::move(items)},
                    {"offsets", pack.bins[b].offsets},
                    {"used", pack.bins[b].used()},
                    {"free", pack.free_capacity(b)}});
  }
  doc["pack"] = {{"max_len", pack.max_len},
                 {"bin_count", pack.bins.size()},
                 {"bins", std::move(bins)}};
  return doc;
}

json BalancePlan(const json& plan, std::size_t devices, std::size_t group_size,
                 const geometry::CostModel& cost) {
  cost.Validate();
  const auto inputs = EncoderInputs(plan);
  std::vector<balancer::WorkItem> items;
  items.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    items.push_back({inputs[i].id, geometry::FlopsCost(cost, inputs[i].patches),
                     static_cast<std::int64_t>(i % devices)});
  }
  const auto a = balancer::GroupBalance(items, devices, group_size);

  json doc;
  doc["devices"] = devices;
  doc["group_size"] = group_size;
  doc["cost_model"] = {{"alpha", cost.alpha}, {"beta", cost.beta}};
  json per_device = json::array();
  double total = 0.0;
  for (std::size_t d = 0; d < a.devices.size(); ++d) {
    per_device.push_back({{"device", d},
                          {"items", a.devices[d].item_ids},
                          {"load", a.devices[d].load}});
    total += a.devices[d].load;
  }
  doc["assignment"] = std::move(per_device);
  doc["item_count"] = items.size();
  doc["total_load"] = total;
  doc["makespan"] = a.makespan();
  // An empty plan has no defined imbalance.
  doc["imbalance"] = items.empty() ? json(nullptr) : json(balancer::Imbalance(a));
  return doc;
}

json FitCsv(std::istream& csv, FitMode mode) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string raw;
  int line = 0;
  bool header_seen = false;
  while (std::getline(csv, raw)) {
    ++line;
    const std::string_view row = Trim(raw);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos ||
        row.find(',', comma + 1) != std::string_view::npos) {
      LineError(ErrorKind::kParse, "csv", line, "expected exactly two columns");
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    double x = CsvNumber(row.substr(0, comma), line);
    double y = CsvNumber(row.substr(comma + 1), line);
    if (mode == FitMode::kPowerLaw) {
      if (!(x > 0.0) || !(y > 0.0)) {
        LineError(ErrorKind::kInvalidInput, "csv", line,
                  "tokens and loss must be positive to take logarithms");
      }
      x = std::log(x);
      y = std::log(y);
    } else {
      if (!(x > 0.0)) {
        LineError(ErrorKind::kInvalidInput, "csv", line,
                  "loss must be positive to take its logarithm");
      }
      x = std::log(x);
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (!header_seen) {
    throw Error(ErrorKind::kParse, "csv is empty; expected a header row");
  }
  const auto fit = scaling::FitLine(xs, ys);
  json doc;
  doc["mode"] = mode == FitMode::kPowerLaw ? "power_law" : "metric";
  doc["points"] = xs.size();
  doc["slope"] = fit.slope;
  doc["intercept"] = fit.intercept;
  if (mode == FitMode::kPowerLaw) {
    // L = coefficient / D^exponent
    doc["exponent"] = -fit.slope;
    doc["coefficient"] = std::exp(fit.intercept);
  }
  return doc;
}

json Predict(FitMode mode, double slope, double intercept, double at) {
  json doc;
  doc["slope"] = slope;
  doc["intercept"] = intercept;
  doc["at"] = at;
  if (mode == FitMode::kPowerLaw) {
    doc["mode"] = "power_law";
    doc["loss"] = scaling::PredictLoss({{slope, intercept}}, at);
  } else {
    const double metric = scaling::PredictMetric({{slope, intercept}}, at);
    doc["mode"] = "metric";
    doc["metric_raw"] = metric;
    doc["metric"] = std::clamp(metric, 0.0, 1.0);
  }
  return doc;
}

json SimulatePlanIo(const json& plan, const loadsim::Topology& topology,
                    std::uint64_t bytes_per_dp_rank, const json* assignment,
                    bool prefetch) {
  topology.Validate();
  const auto inputs = EncoderInputs(plan);
  std::vector<std::uint64_t> bytes;
  bytes.reserve(inputs.size());
  for (const auto& in : inputs) bytes.push_back(in.bytes);

  loadsim::SimulateOptions options;
  options.prefetch = prefetch;
  if (assignment != nullptr) {
    const auto& devices = assignment->at("assignment");
    if (static_cast<std::int64_t>(devices.size()) != topology.world()) {
      throw UsageError("assignment has " + std::to_string(devices.size()) +
                       " devices but the topology world size is " +
                       std::to_string(topology.world()));
    }
    std::map<std::string, std::int64_t> device_of;
    for (const auto& d : devices) {
      for (const auto& id : d.at("items")) {
        device_of[id.get<std::string>()] = d.at("device").get<std::int64_t>();
      }
    }
    for (const auto& in : inputs) {
      const auto it = device_of.find(in.id);
      if (it == device_of.end()) {
        throw Error(ErrorKind::kInvalidInput,
                    "assignment does not place item '" + in.id + "'");
      }
      options.device_of_image.push_back(it->second);
    }
  }
  const auto r = loadsim::SimulateIo(topology, bytes_per_dp_rank, bytes, options);

  json doc;
  doc["topology"] = {{"dp", topology.dp},
                     {"pp", topology.pp},
                     {"tp", topology.tp},
                     {"world", topology.world()}};
  doc["partition"] = assignment != nullptr ? "assignment" : "round_robin";
  doc["naive_read_bytes"] = r.naive_read_bytes;
  doc["optimized_read_bytes"] = r.optimized_read_bytes;
  doc["broadcast_messages"] = r.broadcast_messages;
  doc["pcie_bytes_before_filter"] = r.pcie_bytes_before_filter;
  doc["pcie_bytes_after_filter"] = r.pcie_bytes_after_filter;
  doc["pcie_bytes_per_device"] = r.pcie_bytes_per_device;
  doc["prefetch_overlapped"] = r.prefetch_overlapped;
  return doc;
}

std::string SerializeJson(const json& doc) {
  json copy = doc;
  RoundReals(copy);
  return copy.dump(2) + "\n";
}

}  // namespace seedplan::cli
