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

#include "seedplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seedplan/error.hpp"

namespace seedplan::geometry {

namespace {
constexpr double kEmbedDim = 1280.0;
constexpr double kDepth = 27.0;
}  // namespace

CostModel CostModel::Default() {
  const double d = kEmbedDim;
  return CostModel{
      .alpha = kDepth * (8.0 * d * d + 8.0 * d * d) * 2.0,
      .beta = kDepth * 4.0 * d * 2.0,
  };
}

void CostModel::Validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 ||
      beta < 0.0) {
    throw Error(ErrorKind::kInvalidInput,
                "cost model coefficients must be finite and non-negative");
  }
  if (alpha == 0.0 && beta == 0.0) {
    throw Error(ErrorKind::kInvalidInput,
                "cost model coefficients must not both be zero");
  }
}

std::int64_t SnapToMultiple(std::int64_t native) {
  const std::int64_t snapped =
      (native + kSnapMultiple / 2) / kSnapMultiple * kSnapMultiple;
  return std::max(snapped, kSnapMultiple);
}

ImagePlan PlanImage(std::int64_t native_w, std::int64_t native_h) {
  if (native_w < 1 || native_h < 1) {
    throw Error(ErrorKind::kInvalidInput,
                "image dimensions must be positive, got " +
                    std::to_string(native_w) + "x" + std::to_string(native_h));
  }
  ImagePlan plan;
  plan.native_w = native_w;
  plan.native_h = native_h;
  plan.target_w = SnapToMultiple(native_w);
  plan.target_h = SnapToMultiple(native_h);
  plan.patch_grid_w = plan.target_w / kPatchSize;
  plan.patch_grid_h = plan.target_h / kPatchSize;
  plan.patch_count = plan.patch_grid_w * plan.patch_grid_h;
  plan.token_count =
      (plan.target_w / kSnapMultiple) * (plan.target_h / kSnapMultiple);
  return plan;
}

double FlopsCost(const CostModel& model, std::int64_t patch_count) {
  const auto n = static_cast<double>(patch_count);
  return model.alpha * n + model.beta * n * n;
}

}  // namespace seedplan::geometry
