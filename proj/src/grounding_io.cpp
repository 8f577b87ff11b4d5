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

#include "seedplan/grounding_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "seedplan/error.hpp"

namespace seedplan::grounding {

namespace {

void CheckDims(double image_w, double image_h) {
  if (!(image_w >= 1.0) || !(image_h >= 1.0) || !std::isfinite(image_w) ||
      !std::isfinite(image_h)) {
    throw Error(ErrorKind::kInvalidInput, "image dimensions must be >= 1");
  }
}

int NormalizeCoord(double v, double dim, const char* axis) {
  if (!(v >= 0.0) || !(v <= dim)) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("coordinate ") + axis + "=" + std::to_string(v) +
                    " lies outside [0, " + std::to_string(dim) + "]");
  }
  // Round half up, then clamp.
  const double scaled = std::floor(v / dim * kGridMax + 0.5);
  return static_cast<int>(std::clamp(scaled, 0.0, double{kGridMax}));
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorKind::kParse,
                what + " at byte " + std::to_string(pos_), pos_);
  }

  void Expect(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal) {
      Fail("expected '" + std::string(literal) + "'");
    }
    pos_ += literal.size();
  }

  bool Peek(std::string_view literal) const {
    return text_.substr(pos_, literal.size()) == literal;
  }

  // Token up to the next space or '<'.
  std::string_view Token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '<') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  int GridValue() {
    const std::size_t start = pos_;
    const std::string_view tok = Token();
    if (tok.empty()) {
      pos_ = start;
      Fail("expected an integer");
    }
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') {
        pos_ = start + i;
        Fail("unexpected character in integer");
      }
    }
    if (tok.size() > 1 && tok[0] == '0') {
      pos_ = start;
      Fail("leading zero in integer");
    }
    if (tok.size() > 3) {
      throw Error(ErrorKind::kRange,
                  "value " + std::string(tok) + " outside [0, 999] at byte " +
                      std::to_string(start),
                  start);
    }
    int value = 0;
    std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return value;
  }

  double RealValue() {
    const std::size_t start = pos_;
    const std::string_view tok = Token();
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() ||
        !std::isfinite(value)) {
      pos_ = start;
      Fail("expected a finite number");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <std::size_t N, typename ReadFn>
auto ReadValues(Cursor& c, ReadFn read) {
  std::array<decltype(read()), N> values{};
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) c.Expect(" ");
    values[i] = read();
  }
  return values;
}

Region ParseOne(Cursor& c) {
  if (c.Peek("<bbox>")) {
    c.Expect("<bbox>");
    const std::size_t start = c.pos();
    const auto v = ReadValues<4>(c, [&] { return c.GridValue(); });
    c.Expect("</bbox>");
    if (v[0] > v[2] || v[1] > v[3]) {
      throw Error(ErrorKind::kRange,
                  "inverted box at byte " + std::to_string(start), start);
    }
    return NormalizedBox{v[0], v[1], v[2], v[3]};
  }
  if (c.Peek("<point>")) {
    c.Expect("<point>");
    const auto v = ReadValues<2>(c, [&] { return c.GridValue(); });
    c.Expect("</point>");
    return NormalizedPoint{v[0], v[1]};
  }
  if (c.Peek("<3dbbox>")) {
    c.Expect("<3dbbox>");
    const auto v = ReadValues<9>(c, [&] { return c.RealValue(); });
    c.Expect("</3dbbox>");
    return Box3d{v};
  }
  c.Fail("expected <bbox>, <point> or <3dbbox>");
}

void AppendReal(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

NormalizedBox NormalizeBox(const PixelBox& box, double image_w,
                           double image_h) {
  CheckDims(image_w, image_h);
  if (box.x1 > box.x2 || box.y1 > box.y2) {
    throw Error(ErrorKind::kInvalidInput, "inverted box");
  }
  return NormalizedBox{
      NormalizeCoord(box.x1, image_w, "x1"),
      NormalizeCoord(box.y1, image_h, "y1"),
      NormalizeCoord(box.x2, image_w, "x2"),
      NormalizeCoord(box.y2, image_h, "y2"),
  };
}

NormalizedPoint NormalizePoint(double x, double y, double image_w,
                               double image_h) {
  CheckDims(image_w, image_h);
  return NormalizedPoint{NormalizeCoord(x, image_w, "x"),
                         NormalizeCoord(y, image_h, "y")};
}

double Denormalize(int v, double dim) {
  return static_cast<double>(v) / kGridMax * dim;
}

std::string EmitRegion(const Region& region) {
  struct Emitter {
    std::string operator()(const NormalizedBox& b) const {
      return "<bbox>" + std::to_string(b.x1) + " " + std::to_string(b.y1) +
             " " + std::to_string(b.x2) + " " + std::to_string(b.y2) +
             "</bbox>";
    }
    std::string operator()(const NormalizedPoint& p) const {
      return "<point>" + std::to_string(p.x) + " " + std::to_string(p.y) +
             "</point>";
    }
    std::string operator()(const Box3d& b) const {
      std::string out = "<3dbbox>";
      for (std::size_t i = 0; i < b.values.size(); ++i) {
        if (i > 0) out += ' ';
        AppendReal(out, b.values[i]);
      }
      return out + "</3dbbox>";
    }
  };
  return std::visit(Emitter{}, region);
}

Region ParseRegion(std::string_view text) {
  Cursor c(text);
  Region r = ParseOne(c);
  if (!c.done()) c.Fail("trailing characters");
  return r;
}

std::vector<Region> ParseRegions(std::string_view text) {
  Cursor c(text);
  std::vector<Region> out;
  while (!c.done()) out.push_back(ParseOne(c));
  return out;
}

}  // namespace seedplan::grounding
