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

#include "seedplan/rope2d.hpp"

#include <cmath>
#include <string>

#include "seedplan/error.hpp"

namespace seedplan::rope2d {

void RopeParams::Validate() const {
  if (head_dim <= 0 || head_dim % 4 != 0) {
    throw Error(ErrorKind::kInvalidInput,
                "head_dim must be a positive multiple of 4, got " +
                    std::to_string(head_dim));
  }
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(ErrorKind::kInvalidInput, "rotary base must be > 1");
  }
}

namespace {

void CheckLength(std::span<const double> v, const RopeParams& params) {
  if (static_cast<std::int64_t>(v.size()) != params.head_dim) {
    throw Error(ErrorKind::kInvalidInput,
                "vector length " + std::to_string(v.size()) +
                    " does not match head_dim " +
                    std::to_string(params.head_dim));
  }
}

// Rotates one half of the head in place.
void RotateHalf(std::span<double> half, std::int64_t position, double base) {
  if (position == 0) return;
  const auto half_dim = static_cast<double>(half.size());
  const auto p = static_cast<double>(position);
  for (std::size_t i = 0; i + 1 < half.size(); i += 2) {
    const double freq = std::pow(base, -static_cast<double>(i) / half_dim);
    const double angle = p * freq;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double a = half[i];
    const double b = half[i + 1];
    half[i] = a * c - b * s;
    half[i + 1] = a * s + b * c;
  }
}

}  // namespace

std::vector<double> RopeRotate(std::span<const double> v, PatchPosition pos,
                               const RopeParams& params) {
  params.Validate();
  CheckLength(v, params);
  std::vector<double> out(v.begin(), v.end());
  const auto half = static_cast<std::size_t>(params.head_dim / 2);
  std::span<double> all(out);
  RotateHalf(all.first(half), pos.x, params.base);
  RotateHalf(all.subspan(half), pos.y, params.base);
  return out;
}

double RopeDot(std::span<const double> q, std::span<const double> k,
               PatchPosition pq, PatchPosition pk, const RopeParams& params) {
  const auto rq = RopeRotate(q, pq, params);
  const auto rk = RopeRotate(k, pk, params);
  double dot = 0.0;
  for (std::size_t i = 0; i < rq.size(); ++i) dot += rq[i] * rk[i];
  return dot;
}

}  // namespace seedplan::rope2d
