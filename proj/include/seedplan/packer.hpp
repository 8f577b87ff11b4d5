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

// Packing of per-image token sequences into fixed-capacity training
// sequences. Items packed into one bin share a sequence but must not attend
// to each other, which makes the per-bin attention mask block diagonal.

#ifndef SEEDPLAN_PACKER_HPP_
#define SEEDPLAN_PACKER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seedplan::packer {

struct PackItem {
  std::string id;
  std::int64_t length = 0;
};

struct Bin {
  std::vector<PackItem> items;
  // offsets[k] is where items[k] starts; offsets.back() == used().
  std::vector<std::int64_t> offsets{0};

  std::int64_t used() const { return offsets.back(); }
};

struct PackPlan {
  std::int64_t max_len = 0;
  std::vector<Bin> bins;

  std::int64_t free_capacity(std::size_t bin) const {
    return max_len - bins.at(bin).used();
  }
};

// First-fit decreasing: longest first (ties by id), each item goes to the
// lowest-indexed bin with room. Throws kOversizeItem naming the offending id
// and kInvalidInput for max_len < 1 or a non-positive length.
PackPlan PackFfd(std::span<const PackItem> items, std::int64_t max_len);

// True iff positions i and j of `bin` belong to the same item.
bool AttentionAllowed(const PackPlan& plan, std::size_t bin, std::int64_t i,
                      std::int64_t j);

// Index of the item covering position `pos` in `bin`.
std::size_t SegmentOf(const PackPlan& plan, std::size_t bin, std::int64_t pos);

}  // namespace seedplan::packer

#endif  // SEEDPLAN_PACKER_HPP_
