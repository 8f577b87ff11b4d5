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

// Two-dimensional rotary position encoding over the patch grid.
//
// Layout of a head vector of size D:
//   [0, D/2)  rotated by angles from the column index x
//   [D/2, D)  rotated by angles from the row index y
// Inside each half, coordinates (2i, 2i+1) form rotation plane i with
// frequency base^(-2i / (D/2)).

#ifndef SEEDPLAN_ROPE2D_HPP_
#define SEEDPLAN_ROPE2D_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace seedplan::rope2d {

struct RopeParams {
  std::int64_t head_dim = 64;
  double base = 10000.0;

  // head_dim must be a positive multiple of 4 and base > 1.
  void Validate() const;
};

struct PatchPosition {
  std::int64_t x = 0;  // grid column
  std::int64_t y = 0;  // grid row
};

std::vector<double> RopeRotate(std::span<const double> v, PatchPosition pos,
                               const RopeParams& params);

// <RopeRotate(q, pq), RopeRotate(k, pk)>. Depends only on pq - pk.
double RopeDot(std::span<const double> q, std::span<const double> k,
               PatchPosition pq, PatchPosition pk, const RopeParams& params);

}  // namespace seedplan::rope2d

#endif  // SEEDPLAN_ROPE2D_HPP_
