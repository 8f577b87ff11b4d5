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

#include "seedplan/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace seedplan {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view text, int line) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("config line " + std::to_string(line) +
                                ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::int64_t> ParseList(std::string_view text, int line) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("config line " + std::to_string(line) +
                                ": expected [a, b, ...]");
  }
  std::vector<std::int64_t> out;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!Trim(body).empty()) {
    const auto comma = body.find(',');
    out.push_back(ParseNumber<std::int64_t>(Trim(body.substr(0, comma)), line));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PlannerConfig ParseConfig(std::istream& in, PlannerConfig base) {
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));

    if (key == "budget") {
      base.policy.budget = ParseNumber<std::int64_t>(value, line_no);
    } else if (key == "levels") {
      base.policy.levels = ParseList(value, line_no);
    } else if (key == "default_fps") {
      base.policy.default_fps = ParseNumber<double>(value, line_no);
    } else if (key == "detailed_fps") {
      base.policy.detailed_fps = ParseNumber<double>(value, line_no);
    } else if (key == "dense_fps") {
      base.policy.dense_fps = ParseNumber<double>(value, line_no);
    } else if (key == "max_len") {
      base.max_len = ParseNumber<std::int64_t>(value, line_no);
    } else if (key == "cost_alpha") {
      base.cost.alpha = ParseNumber<double>(value, line_no);
    } else if (key == "cost_beta") {
      base.cost.beta = ParseNumber<double>(value, line_no);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

PlannerConfig LoadConfig(const std::string& path, PlannerConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return ParseConfig(in, std::move(base));
}

}  // namespace seedplan
