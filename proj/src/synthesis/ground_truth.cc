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

#include "docdjinn/synthesis/ground_truth.h"

#include <algorithm>
#include <cctype>
#include <regex>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn::synthesis {

namespace {

using OrderedJson = nlohmann::ordered_json;

// Scalar payload values are read as text; containers are not.
std::optional<std::string> ScalarText(const OrderedJson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return std::nullopt;
}

GtExtraction Fail(RejectReason reason, std::string detail) {
  return {std::nullopt, reason, std::move(detail)};
}

const html::Node* FindGtScript(const html::Document& doc) {
  const html::Node* fallback = nullptr;
  for (const html::Node* n : doc.Elements()) {
    if (n->tag != "script") continue;
    const std::string* id = n->Attr("id");
    if (!id || !EqualsIgnoreCase(Trim(*id), "GT")) continue;
    const std::string* type = n->Attr("type");
    if (type && EqualsIgnoreCase(Trim(*type), "application/json")) return n;
    if (!fallback) fallback = n;
  }
  return fallback;
}

std::string RawText(const html::Node& n) {
  std::string out;
  for (const auto& c : n.children) {
    if (!c->is_element()) out += c->text;
  }
  return out;
}

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

// Tokens owned by the handwriting markup, never field labels.
bool IsRegionToken(std::string_view token) {
  if (EqualsIgnoreCase(token, "handwritten") || EqualsIgnoreCase(token, "signature")) {
    return true;
  }
  return token.size() > 6 && EqualsIgnoreCase(token.substr(0, 6), "author") &&
         IsDigits(token.substr(6));
}

}  // namespace

OrderedJson GroundTruthToJson(const GroundTruth& gt) {
  OrderedJson j;
  if (const auto* qa = std::get_if<QaPairs>(&gt)) {
    j["type"] = "qa_pairs";
    OrderedJson pairs = OrderedJson::object();
    for (const QaPair& p : qa->pairs) pairs[p.question] = p.answer;
    j["pairs"] = std::move(pairs);
  } else if (const auto* cls = std::get_if<ClassLabel>(&gt)) {
    j["type"] = "class_label";
    j["label"] = cls->label;
  } else if (const auto* kie = std::get_if<KieEntities>(&gt)) {
    j["type"] = "kie_entities";
    OrderedJson list = OrderedJson::array();
    for (const KieEntity& e : kie->entities) {
      OrderedJson item;
      item["group"] = e.group;
      item["field"] = e.field;
      item["value"] = e.value;
      item["box"] = e.region ? OrderedJson(nlohmann::json(*e.region)) : OrderedJson(nullptr);
      item["element_ref"] = e.element_ref;
      item["valid"] = e.valid;
      list.push_back(std::move(item));
    }
    j["entities"] = std::move(list);
  } else {
    const auto& dla = std::get<LayoutRegions>(gt);
    j["type"] = "layout_regions";
    OrderedJson list = OrderedJson::array();
    for (const LayoutRegion& r : dla.regions) {
      OrderedJson item;
      item["label"] = r.label;
      item["box"] = r.box ? OrderedJson(nlohmann::json(*r.box)) : OrderedJson(nullptr);
      item["element_ref"] = r.element_ref;
      list.push_back(std::move(item));
    }
    j["regions"] = std::move(list);
  }
  return j;
}

GroundTruth GroundTruthFromJson(const OrderedJson& j) {
  const std::string type = j.at("type").get<std::string>();
  auto read_box = [](const OrderedJson& item) -> std::optional<Box> {
    if (!item.contains("box") || item.at("box").is_null()) return std::nullopt;
    const auto& b = item.at("box");
    return Box{b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(),
               b.at(3).get<int>()};
  };
  if (type == "qa_pairs") {
    QaPairs qa;
    for (const auto& [q, a] : j.at("pairs").items()) {
      qa.pairs.push_back({q, a.get<std::string>()});
    }
    return qa;
  }
  if (type == "class_label") return ClassLabel{j.at("label").get<std::string>()};
  if (type == "kie_entities") {
    KieEntities kie;
    for (const auto& item : j.at("entities")) {
      kie.entities.push_back({item.at("group").get<std::string>(),
                              item.at("field").get<std::string>(),
                              item.at("value").get<std::string>(), read_box(item),
                              item.value("element_ref", ""), item.value("valid", true)});
    }
    return kie;
  }
  if (type == "layout_regions") {
    LayoutRegions dla;
    for (const auto& item : j.at("regions")) {
      dla.regions.push_back({item.at("label").get<std::string>(), read_box(item),
                             item.value("element_ref", "")});
    }
    return dla;
  }
  throw InvalidArgument("unknown ground truth type: " + type);
}

GtExtraction ExtractMacroGt(const html::Document& doc, Task task) {
  DOCDJINN_CHECK_ARG(task != Task::kDla, "macro ground truth is not defined for DLA");
  const html::Node* script = FindGtScript(doc);
  if (!script) return Fail(RejectReason::kNoGt, "no GT script element");

  OrderedJson payload;
  try {
    payload = OrderedJson::parse(RawText(*script));
  } catch (const nlohmann::json::parse_error& e) {
    return Fail(RejectReason::kBadGt, std::string("GT payload is not JSON: ") + e.what());
  }
  if (!payload.is_object()) return Fail(RejectReason::kBadGt, "GT payload is not an object");

  switch (task) {
    case Task::kVqa: {
      QaPairs qa;
      for (const auto& [q, a] : payload.items()) {
        const auto text = ScalarText(a);
        if (!text) return Fail(RejectReason::kBadGt, "non-scalar answer for: " + q);
        qa.pairs.push_back({q, *text});
      }
      if (qa.pairs.empty()) return Fail(RejectReason::kBadGt, "no question-answer pairs");
      return {qa, std::nullopt, {}};
    }
    case Task::kCls: {
      const auto it = payload.find("label");
      if (it == payload.end() || !it->is_string()) {
        return Fail(RejectReason::kBadGt, "missing string \"label\"");
      }
      return {ClassLabel{std::string(Trim(it->get<std::string>()))}, std::nullopt, {}};
    }
    case Task::kKie: {
      KieEntities kie;
      for (const auto& [key, v] : payload.items()) {
        if (v.is_null()) continue;  // "if applicable"
        const auto text = ScalarText(v);
        if (!text) return Fail(RejectReason::kBadGt, "non-scalar value for: " + key);
        kie.entities.push_back({"", key, *text, std::nullopt, "", true});
      }
      if (kie.entities.empty()) return Fail(RejectReason::kBadGt, "no entities");
      return {kie, std::nullopt, {}};
    }
    case Task::kDla:
      break;
  }
  return Fail(RejectReason::kBadGt, "unsupported task");
}

std::vector<std::string> ParseLabelVocabulary(std::string_view gt_type) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < gt_type.size()) {
    size_t end = gt_type.find('\n', pos);
    if (end == std::string_view::npos) end = gt_type.size();
    std::string_view line = Trim(gt_type.substr(pos, end - pos));
    pos = end + 1;
    if (line.size() < 2 || line[0] != '*') continue;
    line = Trim(line.substr(1));
    std::string label;
    if (!line.empty() && line[0] == '"') {
      const size_t close = line.find('"', 1);
      if (close == std::string_view::npos) continue;
      label = std::string(line.substr(1, close - 1));
    } else {
      const size_t colon = line.find(':');
      label = std::string(Trim(line.substr(0, colon)));
    }
    if (!label.empty() && std::find(out.begin(), out.end(), label) == out.end()) {
      out.push_back(std::move(label));
    }
  }
  return out;
}

std::optional<std::string> LookupLabel(const std::vector<std::string>& vocabulary,
                                       std::string_view token) {
  for (const std::string& v : vocabulary) {
    if (EqualsIgnoreCase(v, token)) return v;
  }
  return std::nullopt;
}

GroupPattern GroupPattern::FromFormat(std::string_view gt_format) {
  GroupPattern p;
  const std::string text(gt_format);
  static const std::regex kEnumerated(R"(([A-Za-z][A-Za-z0-9]*(?:_[A-Za-z0-9]+)*)_<idx>)");
  static const std::regex kLiteral(R"re(class\s+"([A-Za-z][A-Za-z0-9_\-]*)")re");
  for (std::sregex_iterator it(text.begin(), text.end(), kEnumerated), end; it != end; ++it) {
    std::string prefix = (*it)[1];
    if (std::find(p.prefixes_.begin(), p.prefixes_.end(), prefix) == p.prefixes_.end()) {
      p.prefixes_.push_back(std::move(prefix));
    }
  }
  for (std::sregex_iterator it(text.begin(), text.end(), kLiteral), end; it != end; ++it) {
    std::string lit = (*it)[1];
    if (std::find(p.literals_.begin(), p.literals_.end(), lit) == p.literals_.end()) {
      p.literals_.push_back(std::move(lit));
    }
  }
  return p;
}

bool GroupPattern::Matches(std::string_view token) const {
  for (const std::string& lit : literals_) {
    if (EqualsIgnoreCase(lit, token)) return true;
  }
  for (const std::string& prefix : prefixes_) {
    if (token.size() > prefix.size() + 1 &&
        EqualsIgnoreCase(token.substr(0, prefix.size()), prefix) &&
        token[prefix.size()] == '_' && IsDigits(token.substr(prefix.size() + 1))) {
      return true;
    }
  }
  return false;
}

GroundTruth ExtractMicroAnnotations(const html::Document& doc, Task task,
                                    const std::vector<std::string>& vocabulary,
                                    const GroupPattern& groups) {
  DOCDJINN_CHECK_ARG(!vocabulary.empty(), "micro annotations: empty vocabulary");
  DOCDJINN_CHECK_ARG(task == Task::kDla || task == Task::kKie,
                     "micro annotations apply to DLA and KIE");

  if (task == Task::kDla) {
    LayoutRegions out;
    for (const html::Node* n : doc.Elements()) {
      for (const std::string& token : html::ClassTokens(*n)) {
        if (auto label = LookupLabel(vocabulary, token)) {
          out.regions.push_back({*label, std::nullopt, html::RefOf(*n)});
          break;
        }
      }
    }
    return out;
  }

  KieEntities out;
  for (const html::Node* n : doc.Elements()) {
    std::string group;
    std::string field;
    std::string unknown;
    for (const std::string& token : html::ClassTokens(*n)) {
      // Field names win over group literals: VOID_MENU_NM is a field even
      // though VOID_MENU is a group.
      if (auto label = LookupLabel(vocabulary, token)) {
        if (field.empty()) field = *label;
      } else if (groups.Matches(token)) {
        if (group.empty()) group = token;
      } else if (unknown.empty() && !IsRegionToken(token)) {
        unknown = token;
      }
    }
    if (field.empty() && group.empty()) continue;
    if (field.empty()) {
      // A bare group token marks a container such as <tr class="MENU_1">.
      if (unknown.empty()) continue;
      out.entities.push_back({group, unknown, html::TextContent(*n), std::nullopt,
                              html::RefOf(*n), false});
      continue;
    }
    const bool grouped_ok = groups.empty() || !group.empty();
    out.entities.push_back({group, field, html::TextContent(*n), std::nullopt,
                            html::RefOf(*n), grouped_ok});
  }
  return out;
}

}  // namespace docdjinn::synthesis
