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

#include "seedplan/balancer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <queue>
#include <utility>

#include "seedplan/error.hpp"

namespace seedplan::balancer {

double Assignment::makespan() const {
  double worst = 0.0;
  for (const auto& d : devices) worst = std::max(worst, d.load);
  return worst;
}

Assignment BalanceLpt(std::span<const WorkItem> items, std::size_t m) {
  if (m == 0) {
    throw Error(ErrorKind::kInvalidInput, "device count must be >= 1");
  }
  for (const auto& item : items) {
    if (!(item.cost > 0.0) || !std::isfinite(item.cost)) {
      throw Error(ErrorKind::kInvalidInput,
                  "item '" + item.id + "' must have a positive finite cost");
    }
  }

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (items[a].cost != items[b].cost) {
                       return items[a].cost > items[b].cost;
                     }
                     return items[a].id < items[b].id;
                   });

  Assignment out;
  out.devices.resize(m);
  // Min-heap on (load, device index).
  using Slot = std::pair<double, std::size_t>;
  std::priority_queue<Slot, std::vector<Slot>, std::greater<>> heap;
  for (std::size_t d = 0; d < m; ++d) heap.emplace(0.0, d);

  for (std::size_t idx : order) {
    auto [load, device] = heap.top();
    heap.pop();
    auto& slot = out.devices[device];
    slot.item_ids.push_back(items[idx].id);
    slot.load = load + items[idx].cost;
    heap.emplace(slot.load, device);
  }
  return out;
}

Assignment GroupBalance(std::span<const WorkItem> items, std::size_t m,
                        std::size_t group_size, bool parallel) {
  if (m == 0 || group_size == 0) {
    throw Error(ErrorKind::kInvalidInput,
                "device count and group size must be >= 1");
  }
  if (m % group_size != 0) {
    throw Error(ErrorKind::kInvalidInput,
                "group size " + std::to_string(group_size) +
                    " does not divide device count " + std::to_string(m));
  }
  const std::size_t groups = m / group_size;
  std::vector<std::vector<WorkItem>> per_group(groups);
  for (const auto& item : items) {
    if (item.origin_rank < 0 ||
        static_cast<std::size_t>(item.origin_rank) >= m) {
      throw Error(ErrorKind::kInvalidInput,
                  "item '" + item.id + "' has origin rank " +
                      std::to_string(item.origin_rank) + " outside [0, " +
                      std::to_string(m) + ")");
    }
    per_group[static_cast<std::size_t>(item.origin_rank) / group_size]
        .push_back(item);
  }

  std::vector<Assignment> results(groups);
  if (parallel && groups > 1) {
    std::vector<std::future<Assignment>> pending;
    pending.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      pending.push_back(std::async(std::launch::async, [&, g] {
        return BalanceLpt(per_group[g], group_size);
      }));
    }
    for (std::size_t g = 0; g < groups; ++g) results[g] = pending[g].get();
  } else {
    for (std::size_t g = 0; g < groups; ++g) {
      results[g] = BalanceLpt(per_group[g], group_size);
    }
  }

  Assignment out;
  out.devices.reserve(m);
  for (auto& r : results) {
    for (auto& d : r.devices) out.devices.push_back(std::move(d));
  }
  return out;
}

double Imbalance(const Assignment& a) {
  if (a.devices.empty()) {
    throw Error(ErrorKind::kUndefinedMetric, "assignment has no devices");
  }
  double total = 0.0;
  for (const auto& d : a.devices) total += d.load;
  if (total <= 0.0) {
    throw Error(ErrorKind::kUndefinedMetric,
                "imbalance is undefined when every device load is zero");
  }
  const double mean = total / static_cast<double>(a.devices.size());
  return a.makespan() / mean;
}

}  // namespace seedplan::balancer
