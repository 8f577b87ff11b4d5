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

// Native-resolution image arithmetic for the vision encoder.
//
// An image is snapped to the nearest multiple of 28 pixels per axis, cut into
// 14x14 patches, and the patch embeddings are 2x2 average pooled before they
// reach the language model. So one post-pool token covers a 28x28 tile and
// four patches.

#ifndef SEEDPLAN_GEOMETRY_HPP_
#define SEEDPLAN_GEOMETRY_HPP_

#include <cstdint>

namespace seedplan::geometry {

inline constexpr std::int64_t kPatchSize = 14;
inline constexpr std::int64_t kPoolFactor = 2;
inline constexpr std::int64_t kSnapMultiple = kPatchSize * kPoolFactor;  // 28

struct ImagePlan {
  std::int64_t native_w = 0;
  std::int64_t native_h = 0;
  std::int64_t target_w = 0;
  std::int64_t target_h = 0;
  std::int64_t patch_grid_w = 0;
  std::int64_t patch_grid_h = 0;
  std::int64_t patch_count = 0;  // pre-pool
  std::int64_t token_count = 0;  // post-pool

  friend bool operator==(const ImagePlan&, const ImagePlan&) = default;
};

// Per-image encoder cost, alpha * n + beta * n^2 for n patches. The linear
// term covers projections and MLPs, the quadratic one self-attention.
struct CostModel {
  double alpha = 0.0;
  double beta = 0.0;

  // Derived from the encoder shape: width 1280, depth 27, MLP ratio 4.
  //   alpha = depth * (8 d^2 attention proj + 8 d^2 MLP) * 2 flops/MAC
  //   beta  = depth * (4 d for QK^T and AV) * 2 flops/MAC
  static CostModel Default();

  // Throws kInvalidInput for negative, non-finite or all-zero coefficients.
  void Validate() const;
};

// Nearest multiple of 28 to `native` (ties round up), never below 28.
std::int64_t SnapToMultiple(std::int64_t native);

// Throws kInvalidInput if either dimension is < 1.
ImagePlan PlanImage(std::int64_t native_w, std::int64_t native_h);

double FlopsCost(const CostModel& model, std::int64_t patch_count);

}  // namespace seedplan::geometry

#endif  // SEEDPLAN_GEOMETRY_HPP_
