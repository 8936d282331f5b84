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

#ifndef DOCDJINN_RENDERING_RENDER_H_
#define DOCDJINN_RENDERING_RENDER_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <opencv2/core.hpp>

#include "docdjinn/common/error.h"
#include "docdjinn/common/geometry.h"
#include "nlohmann/json.hpp"

namespace docdjinn::rendering {

inline constexpr double kRenderDpi = 96.0;

struct PageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const PageSize&, const PageSize&) = default;
};

struct WordBox {
  std::string text;
  Box box;
  std::string element_ref;  // innermost element holding the word
};

struct RenderResult {
  int page_count = 1;
  PageSize page_size;
  cv::Mat page_image;  // CV_8UC3 BGR, first page
  std::map<std::string, Box> element_boxes;  // element ref -> box; zero-area omitted
  std::vector<WordBox> word_boxes;
  std::vector<std::uint8_t> pdf;  // empty when the backend produces none

  Box page_box() const { return {0, 0, page_size.width, page_size.height}; }
};

class RenderError : public Error {
 public:
  using Error::Error;
};

// Lays out HTML that carries element refs (html::Document::AssignRefs).
class RenderBackend {
 public:
  virtual ~RenderBackend() = default;
  virtual std::string name() const = 0;
  // Content extent in whole pixels. Throws RenderError.
  virtual PageSize Measure(const std::string& html) = 0;
  // Throws RenderError.
  virtual RenderResult Render(const std::string& html, PageSize size) = 0;
};

void to_json(nlohmann::json& j, const WordBox& w);
void from_json(const nlohmann::json& j, WordBox& w);

// Boxes and metadata only; the raster is stored separately.
nlohmann::json RenderLayoutToJson(const RenderResult& r);
RenderResult RenderLayoutFromJson(const nlohmann::json& j);

}  // namespace docdjinn::rendering

#endif  // DOCDJINN_RENDERING_RENDER_H_
