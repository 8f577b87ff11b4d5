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

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "seedplan/config.hpp"

using namespace seedplan;

TEST_CASE("defaults") {
  const PlannerConfig c;
  CHECK(c.policy.budget == 81920);
  CHECK(c.policy.levels == std::vector<std::int64_t>{640, 512, 384, 256, 160, 128});
  CHECK(c.policy.default_fps == 1.0);
  CHECK(c.policy.detailed_fps == 2.0);
  CHECK(c.policy.dense_fps == 5.0);
  CHECK(c.cost.alpha == geometry::CostModel::Default().alpha);
}

TEST_CASE("config overrides") {
  std::istringstream in(R"(# planner overrides
budget = 40960
levels = [512, 256,128]   # trailing comment
dense_fps = 4.5

cost_alpha = 1
cost_beta = 0
max_len = 4096
)");
  const PlannerConfig c = ParseConfig(in);
  CHECK(c.policy.budget == 40960);
  CHECK(c.policy.levels == std::vector<std::int64_t>{512, 256, 128});
  CHECK(c.policy.dense_fps == 4.5);
  CHECK(c.policy.default_fps == 1.0);
  CHECK(c.cost.alpha == 1.0);
  CHECK(c.cost.beta == 0.0);
  CHECK(c.max_len == 4096);
}

TEST_CASE("malformed config") {
  std::istringstream unknown("speed = 3\n");
  CHECK_THROWS_AS(ParseConfig(unknown), std::invalid_argument);
  std::istringstream bad_number("budget = lots\n");
  CHECK_THROWS_AS(ParseConfig(bad_number), std::invalid_argument);
  std::istringstream bad_list("levels = 640, 512\n");
  CHECK_THROWS_AS(ParseConfig(bad_list), std::invalid_argument);
  std::istringstream no_eq("budget 5\n");
  CHECK_THROWS_AS(ParseConfig(no_eq), std::invalid_argument);
  CHECK_THROWS_AS(LoadConfig("/nonexistent/seedplan.toml"), std::invalid_argument);
}
