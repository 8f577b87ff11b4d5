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

// Resolution-independent grounding coordinates and their text form.
//
// Pixel coordinates map onto the integer grid [0, 999] via round(v/dim*999).
// Regions are written as
//   <bbox>x1 y1 x2 y2</bbox>
//   <point>x y</point>
//   <3dbbox>xc yc zc sx sy sz pitch yaw roll</3dbbox>
// with single spaces and no leading zeros. 3D boxes are carried as nine
// reals without any geometric interpretation.

#ifndef SEEDPLAN_GROUNDING_IO_HPP_
#define SEEDPLAN_GROUNDING_IO_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace seedplan::grounding {

inline constexpr int kGridMax = 999;

struct PixelBox {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

struct NormalizedBox {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  friend bool operator==(const NormalizedBox&, const NormalizedBox&) = default;
};

struct NormalizedPoint {
  int x = 0, y = 0;
  friend bool operator==(const NormalizedPoint&,
                         const NormalizedPoint&) = default;
};

struct Box3d {
  std::array<double, 9> values{};
  friend bool operator==(const Box3d&, const Box3d&) = default;
};

using Region = std::variant<NormalizedBox, NormalizedPoint, Box3d>;

// Throws kInvalidInput for image dims < 1, coordinates outside the image,
// or an inverted box.
NormalizedBox NormalizeBox(const PixelBox& box, double image_w, double image_h);
NormalizedPoint NormalizePoint(double x, double y, double image_w,
                               double image_h);

// v / 999 * dim.
double Denormalize(int v, double dim);

std::string EmitRegion(const Region& region);

// Exact inverse of EmitRegion. Malformed text raises kParse with the byte
// offset of the problem; a value outside [0, 999] or an inverted box raises
// kRange.
Region ParseRegion(std::string_view text);

// Parses back-to-back regions such as "<point>1 2</point><point>3 4</point>".
std::vector<Region> ParseRegions(std::string_view text);

}  // namespace seedplan::grounding

#endif  // SEEDPLAN_GROUNDING_IO_HPP_
