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

// Byte accounting for parallelism-aware data loading. Nothing is read; the
// simulator only compares the naive scheme (every rank reads its replica)
// with one reader per pipeline/tensor group plus a metadata broadcast, and
// host-to-device traffic before and after dropping images a device will not
// encode.

#ifndef SEEDPLAN_LOADSIM_HPP_
#define SEEDPLAN_LOADSIM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace seedplan::loadsim {

struct Topology {
  std::int64_t dp = 1;
  std::int64_t pp = 1;
  std::int64_t tp = 1;

  std::int64_t world() const { return dp * pp * tp; }
  void Validate() const;
};

struct IoReport {
  std::uint64_t naive_read_bytes = 0;
  std::uint64_t optimized_read_bytes = 0;
  std::uint64_t broadcast_messages = 0;
  std::uint64_t pcie_bytes_before_filter = 0;
  std::uint64_t pcie_bytes_after_filter = 0;
  std::vector<std::uint64_t> pcie_bytes_per_device;  // after filtering
  bool prefetch_overlapped = true;
};

struct SimulateOptions {
  // device_of_image[i] is the encoder device for image i, e.g. taken from a
  // balancer assignment. Round-robin when empty.
  std::vector<std::int64_t> device_of_image;
  bool prefetch = true;
};

IoReport SimulateIo(const Topology& t, std::uint64_t bytes_per_dp_rank,
                    std::span<const std::uint64_t> image_bytes,
                    const SimulateOptions& options = {});

}  // namespace seedplan::loadsim

#endif  // SEEDPLAN_LOADSIM_HPP_
