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

// Dynamic frame-resolution sampling for video.
//
// The frame rate comes from the task kind. Given the resulting frame count,
// the per-frame token level is the largest predefined level that keeps the
// whole video under the token budget. When even the smallest level does not
// fit, frames are dropped by uniform striding until it does.

#ifndef SEEDPLAN_VIDEOPLAN_HPP_
#define SEEDPLAN_VIDEOPLAN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seedplan::videoplan {

enum class TaskKind { kGeneral, kTemporalDetail, kDenseMotion };

// Accepts "general", "temporal_detail", "dense_motion".
TaskKind ParseTaskKind(std::string_view name);
std::string_view TaskKindName(TaskKind kind);

struct SamplingPolicy {
  double default_fps = 1.0;
  double detailed_fps = 2.0;
  double dense_fps = 5.0;
  std::int64_t budget = 81920;
  std::vector<std::int64_t> levels{640, 512, 384, 256, 160, 128};

  // Levels strictly descending and positive, budget >= smallest level,
  // all rates positive.
  void Validate() const;
};

struct VideoPlan {
  std::int64_t nominal_frames = 0;
  // Indices into the nominal frame sequence, ascending.
  std::vector<std::int64_t> frame_indices;
  std::vector<double> frame_times;  // seconds
  std::int64_t level = 0;           // tokens per frame
  std::int64_t total_tokens = 0;
  bool fallback_applied = false;

  std::int64_t frame_count() const {
    return static_cast<std::int64_t>(frame_indices.size());
  }
};

double ChooseFps(TaskKind kind, const SamplingPolicy& policy = {});

VideoPlan PlanVideo(double duration, double fps,
                    const SamplingPolicy& policy = {});

struct FrameDims {
  std::int64_t w = 0;
  std::int64_t h = 0;

  friend bool operator==(const FrameDims&, const FrameDims&) = default;
};

// Pixel size of a frame holding at most `level` post-pool tokens at roughly
// the given width/height ratio. Both sides are multiples of 28.
FrameDims LevelToDims(std::int64_t level, double aspect);

// "[<t> second]" with exactly one decimal digit, e.g. "[1.5 second]".
std::string TimestampToken(double seconds);

}  // namespace seedplan::videoplan

#endif  // SEEDPLAN_VIDEOPLAN_HPP_
