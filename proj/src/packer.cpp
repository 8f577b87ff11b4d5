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

#include "seedplan/packer.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "seedplan/error.hpp"

namespace seedplan::packer {

PackPlan PackFfd(std::span<const PackItem> items, std::int64_t max_len) {
  if (max_len < 1) {
    throw Error(ErrorKind::kInvalidInput, "max_len must be >= 1");
  }
  for (const auto& item : items) {
    if (item.length < 1) {
      throw Error(ErrorKind::kInvalidInput,
                  "item '" + item.id + "' has non-positive length");
    }
    if (item.length > max_len) {
      throw Error(ErrorKind::kOversizeItem,
                  "item '" + item.id + "' of length " +
                      std::to_string(item.length) + " exceeds max_len " +
                      std::to_string(max_len));
    }
  }

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (items[a].length != items[b].length) {
                       return items[a].length > items[b].length;
                     }
                     return items[a].id < items[b].id;
                   });

  PackPlan plan;
  plan.max_len = max_len;
  for (std::size_t idx : order) {
    const PackItem& item = items[idx];
    auto it = std::find_if(plan.bins.begin(), plan.bins.end(), [&](const Bin& b) {
      return b.used() + item.length <= max_len;
    });
    if (it == plan.bins.end()) {
      plan.bins.emplace_back();
      it = std::prev(plan.bins.end());
    }
    it->offsets.push_back(it->used() + item.length);
    it->items.push_back(item);
  }
  return plan;
}

std::size_t SegmentOf(const PackPlan& plan, std::size_t bin, std::int64_t pos) {
  if (bin >= plan.bins.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "bin index " + std::to_string(bin) + " out of range");
  }
  const Bin& b = plan.bins[bin];
  if (pos < 0 || pos >= b.used()) {
    throw Error(ErrorKind::kInvalidInput,
                "position " + std::to_string(pos) + " outside bin of length " +
                    std::to_string(b.used()));
  }
  // First offset strictly greater than pos ends the covering segment.
  const auto it = std::upper_bound(b.offsets.begin(), b.offsets.end(), pos);
  return static_cast<std::size_t>(it - b.offsets.begin()) - 1;
}

bool AttentionAllowed(const PackPlan& plan, std::size_t bin, std::int64_t i,
                      std::int64_t j) {
  return SegmentOf(plan, bin, i) == SegmentOf(plan, bin, j);
}

}  // namespace seedplan::packer
