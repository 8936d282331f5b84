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

#include "docdjinn/synthesis/regions.h"

#include <cstdlib>

#include "docdjinn/common/text.h"

namespace docdjinn::synthesis {

namespace {

std::optional<int> AuthorNumber(std::string_view token) {
  if (token.size() <= 6 || !EqualsIgnoreCase(token.substr(0, 6), "author")) {
    return std::nullopt;
  }
  int value = 0;
  for (char c : token.substr(6)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return value >= 1 ? std::optional<int>(value) : std::nullopt;
}

}  // namespace

std::vector<HandwritingRegion> ExtractHandwritingRegions(const html::Document& doc,
                                                         std::vector<std::string>* warnings) {
  std::vector<HandwritingRegion> out;
  for (const html::Node* n : doc.Elements()) {
    if (!html::HasClass(*n, "handwritten")) continue;
    HandwritingRegion r;
    r.element_ref = html::RefOf(*n);
    r.text = html::TextContent(*n);
    bool has_author = false;
    for (const std::string& token : html::ClassTokens(*n)) {
      if (EqualsIgnoreCase(token, "signature")) r.signature = true;
      if (auto a = AuthorNumber(token); a && !has_author) {
        r.author_id = *a;
        has_author = true;
      }
    }
    if (r.text.empty()) {
      if (warnings) warnings->push_back("handwriting region " + r.element_ref + " has no text; dropped");
      continue;
    }
    if (!has_author && warnings) {
      warnings->push_back("handwriting region " + r.element_ref + " has no author class; using author1");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VisualElementPlaceholder> ExtractPlaceholders(const html::Document& doc) {
  std::vector<VisualElementPlaceholder> out;
  for (const html::Node* n : doc.Elements()) {
    const std::string* type = n->Attr("data-placeholder");
    if (!type) continue;
    VisualElementPlaceholder p;
    p.element_ref = html::RefOf(*n);
    p.raw_type = std::string(Trim(*type));
    if (const std::string* content = n->Attr("data-content")) {
      p.content = std::string(Trim(*content));
    }
    if (const std::string* style = n->Attr("style")) {
      const auto decls = html::ParseStyle(*style);
      if (auto it = decls.find("width"); it != decls.end()) {
        p.declared_width_px = html::ParseLengthPx(it->second);
      }
      if (auto it = decls.find("height"); it != decls.end()) {
        p.declared_height_px = html::ParseLengthPx(it->second);
      }
      if (auto it = decls.find("z-index"); it != decls.end()) {
        p.z_order = std::atoi(it->second.c_str());
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

void to_json(nlohmann::json& j, const HandwritingRegion& r) {
  j = {{"element_ref", r.element_ref}, {"author_id", r.author_id},
       {"writer_id", r.writer_id},     {"text", r.text},
       {"signature", r.signature},     {"region", r.region},
       {"word_boxes", r.word_boxes}};
}

void from_json(const nlohmann::json& j, HandwritingRegion& r) {
  r.element_ref = j.at("element_ref").get<std::string>();
  r.author_id = j.at("author_id").get<int>();
  r.writer_id = j.value("writer_id", -1);
  r.text = j.at("text").get<std::string>();
  r.signature = j.value("signature", false);
  r.region = j.at("region").get<Box>();
  r.word_boxes = j.value("word_boxes", std::vector<Box>{});
}

void to_json(nlohmann::json& j, const VisualElementPlaceholder& p) {
  j = {{"element_ref", p.element_ref},
       {"raw_type", p.raw_type},
       {"canonical_type", p.canonical_type},
       {"content", p.content},
       {"z_order", p.z_order}};
  j["declared_width_px"] = p.declared_width_px ? nlohmann::json(*p.declared_width_px) : nlohmann::json(nullptr);
  j["declared_height_px"] = p.declared_height_px ? nlohmann::json(*p.declared_height_px) : nlohmann::json(nullptr);
  j["box"] = p.box ? nlohmann::json(*p.box) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, VisualElementPlaceholder& p) {
  p.element_ref = j.at("element_ref").get<std::string>();
  p.raw_type = j.at("raw_type").get<std::string>();
  p.canonical_type = j.value("canonical_type", "");
  p.content = j.value("content", "");
  p.z_order = j.value("z_order", 0);
  auto opt = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
  };
  p.declared_width_px = opt("declared_width_px");
  p.declared_height_px = opt("declared_height_px");
  if (j.contains("box") && !j.at("box").is_null()) p.box = j.at("box").get<Box>();
}

}  // namespace docdjinn::synthesis
