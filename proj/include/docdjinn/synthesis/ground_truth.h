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

#ifndef DOCDJINN_SYNTHESIS_GROUND_TRUTH_H_
#define DOCDJINN_SYNTHESIS_GROUND_TRUTH_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "docdjinn/common/geometry.h"
#include "docdjinn/common/task.h"
#include "docdjinn/synthesis/html.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {

struct QaPair {
  std::string question;
  std::string answer;
};

// Insertion order of the payload is kept.
struct QaPairs {
  std::vector<QaPair> pairs;
};

struct ClassLabel {
  std::string label;
};

struct KieEntity {
  std::string group;  // empty for flat (macro) entities
  std::string field;
  std::string value;
  std::optional<Box> region;
  std::string element_ref;  // empty for macro entities
  bool valid = true;        // false: unknown field or missing group
};

struct KieEntities {
  std::vector<KieEntity> entities;
};

struct LayoutRegion {
  std::string label;
  std::optional<Box> box;  // filled from the render
  std::string element_ref;
};

struct LayoutRegions {
  std::vector<LayoutRegion> regions;
};

using GroundTruth = std::variant<QaPairs, ClassLabel, KieEntities, LayoutRegions>;

// Task-appropriate export form: QA map, {"label"}, entity list, region list.
nlohmann::ordered_json GroundTruthToJson(const GroundTruth& gt);
GroundTruth GroundTruthFromJson(const nlohmann::ordered_json& j);

// Either a ground truth or the reason none could be read.
struct GtExtraction {
  std::optional<GroundTruth> gt;
  std::optional<RejectReason> reject;
  std::string detail;

  bool ok() const { return gt.has_value(); }
};

// Reads the <script type="application/json" id="GT"> payload. VQA, CLS and
// flat KIE only.
GtExtraction ExtractMacroGt(const html::Document& doc, Task task);

// Labels listed as bullets ("* label", "* \"LABEL\": ...", "* KEY: ...").
std::vector<std::string> ParseLabelVocabulary(std::string_view gt_type);

// Class tokens that name a KIE group: enumerated families such as PAIR_<idx>
// and literal group classes such as "GENERIC".
class GroupPattern {
 public:
  GroupPattern() = default;
  // Built from the dataset's gt_format text.
  static GroupPattern FromFormat(std::string_view gt_format);

  bool empty() const { return prefixes_.empty() && literals_.empty(); }
  bool Matches(std::string_view token) const;

  const std::vector<std::string>& prefixes() const { return prefixes_; }
  const std::vector<std::string>& literals() const { return literals_; }

 private:
  std::vector<std::string> prefixes_;  // "PAIR" for PAIR_<idx>
  std::vector<std::string> literals_;
};

// Scans class attributes. DLA: tokens in the vocabulary become regions.
// KIE: a group token plus a field token become one entity; token order does
// not matter. `doc` should carry refs (Document::AssignRefs).
GroundTruth ExtractMicroAnnotations(const html::Document& doc, Task task,
                                    const std::vector<std::string>& vocabulary,
                                    const GroupPattern& groups);

// Case-insensitive vocabulary lookup; returns the vocabulary spelling.
std::optional<std::string> LookupLabel(const std::vector<std::string>& vocabulary,
                                       std::string_view token);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_GROUND_TRUTH_H_
