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

// Greedy balancing of vision-encoder work across devices.
//
// Images are weighted by their estimated FLOPS, sorted heaviest first and
// handed one by one to the currently lightest device (LPT scheduling). For
// large clusters the redistribution is confined to contiguous device groups.

#ifndef SEEDPLAN_BALANCER_HPP_
#define SEEDPLAN_BALANCER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seedplan::balancer {

struct WorkItem {
  std::string id;
  double cost = 0.0;             // flops, > 0
  std::int64_t origin_rank = 0;  // device that holds the item before balancing
};

struct DeviceLoad {
  std::vector<std::string> item_ids;  // in placement order
  double load = 0.0;
};

struct Assignment {
  std::vector<DeviceLoad> devices;

  std::size_t device_count() const { return devices.size(); }
  double makespan() const;
};

// Ties: equal costs by ascending id, equal loads by lowest device index.
// Throws kInvalidInput for m == 0 or a non-positive/non-finite cost.
Assignment BalanceLpt(std::span<const WorkItem> items, std::size_t m);

// Devices are split into contiguous groups of `group_size`; each item is
// balanced only within the group owning its origin rank. Groups run
// concurrently when `parallel` is set; the result is the same either way.
Assignment GroupBalance(std::span<const WorkItem> items, std::size_t m,
                        std::size_t group_size, bool parallel = false);

// max load / mean load. Throws kUndefinedMetric when every load is zero.
double Imbalance(const Assignment& a);

}  // namespace seedplan::balancer

#endif  // SEEDPLAN_BALANCER_HPP_
