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

#ifndef DOCDJINN_SYNTHESIS_REGIONS_H_
#define DOCDJINN_SYNTHESIS_REGIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "docdjinn/common/geometry.h"
#include "docdjinn/synthesis/html.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {

struct HandwritingRegion {
  std::string element_ref;
  int author_id = 1;
  int writer_id = -1;  // assigned by the handwriting stage
  std::string text;
  bool signature = false;
  Box region;                   // filled from the render
  std::vector<Box> word_boxes;  // filled from the render
};

// Element reserving space for a stamp, logo, figure, barcode or photo.
struct VisualElementPlaceholder {
  std::string element_ref;
  std::string raw_type;
  std::string canonical_type;  // empty until mapped
  std::string content;
  std::optional<double> declared_width_px;
  std::optional<double> declared_height_px;
  int z_order = 0;
  std::optional<Box> box;  // filled from the render
};

// Elements with class "handwritten". `warnings` collects defaulted author ids
// and dropped empty regions.
std::vector<HandwritingRegion> ExtractHandwritingRegions(
    const html::Document& doc, std::vector<std::string>* warnings = nullptr);

// Elements with a data-placeholder attribute.
std::vector<VisualElementPlaceholder> ExtractPlaceholders(const html::Document& doc);

void to_json(nlohmann::json& j, const HandwritingRegion& r);
void from_json(const nlohmann::json& j, HandwritingRegion& r);
void to_json(nlohmann::json& j, const VisualElementPlaceholder& p);
void from_json(const nlohmann::json& j, VisualElementPlaceholder& p);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_REGIONS_H_
