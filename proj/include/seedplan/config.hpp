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

// Planner defaults and the optional config file that overrides them.
//
// The file is a flat TOML subset: `key = value` lines, `#` comments,
// numbers and `[a, b, c]` integer lists. Recognised keys:
//
//   budget        = 81920
//   levels        = [640, 512, 384, 256, 160, 128]
//   default_fps   = 1
//   detailed_fps  = 2
//   dense_fps     = 5
//   max_len       = 16384
//   cost_alpha    = 1415577600
//   cost_beta     = 276480

#ifndef SEEDPLAN_CONFIG_HPP_
#define SEEDPLAN_CONFIG_HPP_

#include <cstdint>
#include <istream>
#include <string>

#include "seedplan/geometry.hpp"
#include "seedplan/videoplan.hpp"

namespace seedplan {

struct PlannerConfig {
  videoplan::SamplingPolicy policy;
  geometry::CostModel cost = geometry::CostModel::Default();
  std::int64_t max_len = 16384;
};

// Applies the keys found in `in` on top of `base`. Throws std::invalid_argument
// naming the line for unknown keys or malformed values.
PlannerConfig ParseConfig(std::istream& in, PlannerConfig base = {});
PlannerConfig LoadConfig(const std::string& path, PlannerConfig base = {});

}  // namespace seedplan

#endif  // SEEDPLAN_CONFIG_HPP_
