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

#include "docdjinn/rendering/render.h"

namespace docdjinn::rendering {

void to_json(nlohmann::json& j, const WordBox& w) {
  j = {{"text", w.text}, {"box", w.box}, {"element_ref", w.element_ref}};
}

void from_json(const nlohmann::json& j, WordBox& w) {
  w.text = j.at("text").get<std::string>();
  w.box = j.at("box").get<Box>();
  w.element_ref = j.value("element_ref", "");
}

nlohmann::json RenderLayoutToJson(const RenderResult& r) {
  nlohmann::json boxes = nlohmann::json::object();
  for (const auto& [ref, box] : r.element_boxes) boxes[ref] = box;
  return {{"page_count", r.page_count},
          {"width", r.page_size.width},
          {"height", r.page_size.height},
          {"element_boxes", boxes},
          {"word_boxes", r.word_boxes}};
}

RenderResult RenderLayoutFromJson(const nlohmann::json& j) {
  RenderResult r;
  r.page_count = j.at("page_count").get<int>();
  r.page_size = {j.at("width").get<int>(), j.at("height").get<int>()};
  for (const auto& [ref, box] : j.at("element_boxes").items()) {
    r.element_boxes[ref] = box.get<Box>();
  }
  r.word_boxes = j.at("word_boxes").get<std::vector<WordBox>>();
  return r;
}

}  // namespace docdjinn::rendering
