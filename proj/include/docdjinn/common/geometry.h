// Copyright 2026 The DocDjinn Authors.
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

#ifndef DOCDJINN_COMMON_GEOMETRY_H_
#define DOCDJINN_COMMON_GEOMETRY_H_

#include <algorithm>
#include <optional>
#include <span>

#include "nlohmann/json.hpp"

namespace docdjinn {

// Axis-aligned integer pixel box. `right` and `bottom` are exclusive, so an
// empty box has zero width or height.
struct Box {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;

  int width() const { return right - left; }
  int height() const { return bottom - top; }
  long long area() const {
    return empty() ? 0 : static_cast<long long>(width()) * height();
  }
  bool empty() const { return right <= left || bottom <= top; }
  bool valid() const { return left <= right && top <= bottom; }

  bool Contains(const Box& other, int slack = 0) const {
    return other.left >= left - slack && other.top >= top - slack &&
           other.right <= right + slack && other.bottom <= bottom + slack;
  }

  friend bool operator==(const Box&, const Box&) = default;
};

inline Box Union(const Box& a, const Box& b) {
  return {std::min(a.left, b.left), std::min(a.top, b.top),
          std::max(a.right, b.right), std::max(a.bottom, b.bottom)};
}

inline std::optional<Box> UnionAll(std::span<const Box> boxes) {
  if (boxes.empty()) return std::nullopt;
  Box out = boxes.front();
  for (const Box& b : boxes.subspan(1)) out = Union(out, b);
  return out;
}

inline Box Intersect(const Box& a, const Box& b) {
  Box out{std::max(a.left, b.left), std::max(a.top, b.top),
          std::min(a.right, b.right), std::min(a.bottom, b.bottom)};
  if (out.right < out.left) out.right = out.left;
  if (out.bottom < out.top) out.bottom = out.top;
  return out;
}

inline double IoU(const Box& a, const Box& b) {
  const long long inter = Intersect(a, b).area();
  const long long uni = a.area() + b.area() - inter;
  return uni <= 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

// Shifts `box` so that it lies inside `bounds`, shrinking it only when it is
// larger than `bounds`.
inline Box ClampInto(const Box& box, const Box& bounds) {
  Box out = box;
  const int w = std::min(box.width(), bounds.width());
  const int h = std::min(box.height(), bounds.height());
  out.left = std::clamp(box.left, bounds.left, bounds.right - w);
  out.top = std::clamp(box.top, bounds.top, bounds.bottom - h);
  out.right = out.left + w;
  out.bottom = out.top + h;
  return out;
}

inline void to_json(nlohmann::json& j, const Box& b) {
  j = nlohmann::json::array({b.left, b.top, b.right, b.bottom});
}

inline void from_json(const nlohmann::json& j, Box& b) {
  b.left = j.at(0).get<int>();
  b.top = j.at(1).get<int>();
  b.right = j.at(2).get<int>();
  b.bottom = j.at(3).get<int>();
}

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_GEOMETRY_H_
