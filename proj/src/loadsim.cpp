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

#include "seedplan/loadsim.hpp"

#include <string>

#include "seedplan/error.hpp"

namespace seedplan::loadsim {

void Topology::Validate() const {
  if (dp < 1 || pp < 1 || tp < 1) {
    throw Error(ErrorKind::kInvalidInput,
                "topology widths must be >= 1, got dp=" + std::to_string(dp) +
                    " pp=" + std::to_string(pp) + " tp=" + std::to_string(tp));
  }
}

IoReport SimulateIo(const Topology& t, std::uint64_t bytes_per_dp_rank,
                    std::span<const std::uint64_t> image_bytes,
                    const SimulateOptions& options) {
  t.Validate();
  const auto dp = static_cast<std::uint64_t>(t.dp);
  const auto group = static_cast<std::uint64_t>(t.pp * t.tp);
  const auto world = static_cast<std::uint64_t>(t.world());

  IoReport r;
  r.naive_read_bytes = dp * group * bytes_per_dp_rank;
  r.optimized_read_bytes = dp * bytes_per_dp_rank;
  r.broadcast_messages = dp * (group - 1);
  r.prefetch_overlapped = options.prefetch;

  const auto& placement = options.device_of_image;
  if (!placement.empty() && placement.size() != image_bytes.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "image placement has " + std::to_string(placement.size()) +
                    " entries for " + std::to_string(image_bytes.size()) +
                    " images");
  }

  std::uint64_t total = 0;
  r.pcie_bytes_per_device.assign(world, 0);
  for (std::size_t i = 0; i < image_bytes.size(); ++i) {
    std::uint64_t device = i % world;
    if (!placement.empty()) {
      if (placement[i] < 0 || static_cast<std::uint64_t>(placement[i]) >= world) {
        throw Error(ErrorKind::kInvalidInput,
                    "image " + std::to_string(i) + " placed on device " +
                        std::to_string(placement[i]) + " outside world " +
                        std::to_string(world));
      }
      device = static_cast<std::uint64_t>(placement[i]);
    }
    r.pcie_bytes_per_device[device] += image_bytes[i];
    total += image_bytes[i];
  }
  // Unfiltered, every device moves the whole batch to its accelerator.
  r.pcie_bytes_before_filter = world * total;
  r.pcie_bytes_after_filter = total;
  return r;
}

}  // namespace seedplan::loadsim
