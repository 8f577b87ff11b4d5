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

#include "seedplan/videoplan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>

#include "seedplan/error.hpp"
#include "seedplan/geometry.hpp"

namespace seedplan::videoplan {

namespace {
// Keeps floor(duration * fps) well inside int64.
constexpr double kMaxNominalFrames = 1e15;

__extension__ using Wide = __int128;
}  // namespace

TaskKind ParseTaskKind(std::string_view name) {
  if (name == "general") return TaskKind::kGeneral;
  if (name == "temporal_detail") return TaskKind::kTemporalDetail;
  if (name == "dense_motion") return TaskKind::kDenseMotion;
  throw Error(ErrorKind::kInvalidInput,
              "unknown task kind '" + std::string(name) + "'");
}

std::string_view TaskKindName(TaskKind kind) {
  switch (kind) {
    case TaskKind::kGeneral:
      return "general";
    case TaskKind::kTemporalDetail:
      return "temporal_detail";
    case TaskKind::kDenseMotion:
      return "dense_motion";
  }
  return "general";
}

void SamplingPolicy::Validate() const {
  for (double fps : {default_fps, detailed_fps, dense_fps}) {
    if (!(fps > 0.0) || !std::isfinite(fps)) {
      throw Error(ErrorKind::kInvalidInput, "sampling rates must be positive");
    }
  }
  if (levels.empty()) {
    throw Error(ErrorKind::kInvalidInput, "level list is empty");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1) {
      throw Error(ErrorKind::kInvalidInput, "levels must be positive");
    }
    if (i > 0 && levels[i] >= levels[i - 1]) {
      throw Error(ErrorKind::kInvalidInput,
                  "levels must be strictly descending");
    }
  }
  if (budget < levels.back()) {
    throw Error(ErrorKind::kInvalidInput,
                "budget " + std::to_string(budget) +
                    " is below the smallest level " +
                    std::to_string(levels.back()));
  }
}

double ChooseFps(TaskKind kind, const SamplingPolicy& policy) {
  switch (kind) {
    case TaskKind::kGeneral:
      return policy.default_fps;
    case TaskKind::kTemporalDetail:
      return policy.detailed_fps;
    case TaskKind::kDenseMotion:
      return policy.dense_fps;
  }
  return policy.default_fps;
}

VideoPlan PlanVideo(double duration, double fps, const SamplingPolicy& policy) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorKind::kInvalidInput, "video duration must be positive");
  }
  if (!(fps > 0.0) || !std::isfinite(fps)) {
    throw Error(ErrorKind::kInvalidInput, "fps must be positive");
  }
  policy.Validate();
  const double raw = std::floor(duration * fps);
  if (raw > kMaxNominalFrames) {
    throw Error(ErrorKind::kInvalidInput, "video too long to plan");
  }

  VideoPlan plan;
  plan.nominal_frames = std::max<std::int64_t>(1, static_cast<std::int64_t>(raw));
  const std::int64_t n = plan.nominal_frames;

  plan.level = 0;
  for (std::int64_t level : policy.levels) {
    if (n <= policy.budget / level) {
      plan.level = level;
      break;
    }
  }

  std::int64_t count = n;
  if (plan.level == 0) {
    plan.level = policy.levels.back();
    plan.fallback_applied = true;
    count = policy.budget / plan.level;
  }

  plan.frame_indices.reserve(static_cast<std::size_t>(count));
  plan.frame_times.reserve(static_cast<std::size_t>(count));
  for (std::int64_t j = 0; j < count; ++j) {
    // Centred uniform stride; the identity when count == n.
    const std::int64_t idx =
        plan.fallback_applied
            ? static_cast<std::int64_t>(Wide{2 * j + 1} * n / (2 * count))
            : j;
    plan.frame_indices.push_back(idx);
    const double t = (static_cast<double>(idx) + 0.5) / fps;
    // Only reachable with a single clamped frame (duration * fps < 1).
    plan.frame_times.push_back(t < duration ? t : duration / 2.0);
  }
  plan.total_tokens = count * plan.level;
  return plan;
}

FrameDims LevelToDims(std::int64_t level, double aspect) {
  if (level < 1) {
    throw Error(ErrorKind::kInvalidInput, "level must be >= 1");
  }
  if (!(aspect > 0.0) || !std::isfinite(aspect)) {
    throw Error(ErrorKind::kInvalidInput, "aspect must be positive");
  }

  // Candidates follow the aspect ratio along one axis with the other axis
  // rounded; 1x1 is always among them.
  std::int64_t best_w = 1;
  std::int64_t best_h = 1;
  auto key = [aspect](std::int64_t w, std::int64_t h) {
    return std::make_tuple(w * h,
                           -std::abs(static_cast<double>(w) / h - aspect), w);
  };
  auto consider = [&](std::int64_t w, std::int64_t h) {
    if (w * h > level) return;
    if (key(w, h) > key(best_w, best_h)) {
      best_w = w;
      best_h = h;
    }
  };
  // Every partner within half a cell of the ideal is a candidate.
  auto partners = [level](double ideal, auto&& visit) {
    const double centre = std::floor(std::min(ideal, static_cast<double>(level)));
    for (double v = std::max(1.0, centre - 1.0); v <= centre + 1.0; v += 1.0) {
      if (std::abs(v - ideal) <= 0.5 || (v == 1.0 && ideal < 1.5)) {
        visit(static_cast<std::int64_t>(v));
      }
    }
  };
  for (std::int64_t h = 1; h <= level; ++h) {
    partners(h * aspect, [&](std::int64_t w) { consider(w, h); });
  }
  for (std::int64_t w = 1; w <= level; ++w) {
    partners(w / aspect, [&](std::int64_t h) { consider(w, h); });
  }
  return FrameDims{best_w * geometry::kSnapMultiple,
                   best_h * geometry::kSnapMultiple};
}

std::string TimestampToken(double seconds) {
  if (!(seconds >= 0.0) || !std::isfinite(seconds)) {
    throw Error(ErrorKind::kInvalidInput,
                "timestamp must be a non-negative finite number");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "[%.1f second]", seconds + 0.0);
  return buf;
}

}  // namespace seedplan::videoplan
