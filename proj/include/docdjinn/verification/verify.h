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

#ifndef DOCDJINN_VERIFICATION_VERIFY_H_
#define DOCDJINN_VERIFICATION_VERIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docdjinn/common/geometry.h"
#include "docdjinn/common/task.h"
#include "docdjinn/rendering/ocr.h"
#include "docdjinn/rendering/render.h"
#include "docdjinn/synthesis/ground_truth.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {
class SynthesizedDocument;
}

namespace docdjinn::verification {

inline constexpr double kDefaultTau = 0.75;

// Edit distance over code points.
size_t Levenshtein(std::u32string_view a, std::u32string_view b);

// Case-folds and collapses whitespace.
std::u32string NormalizeForMatch(std::string_view text);

// 1 - lev / max length on normalized text; 1 when both are empty.
double Nls(std::string_view a, std::string_view b);

struct SpanMatch {
  double similarity = 0.0;
  size_t begin = 0;  // word index range [begin, end)
  size_t end = 0;
};

// Best Nls between `needle` and any window of 1..(needle words + 1)
// consecutive words; window edges lose leading/trailing punctuation.
SpanMatch BestSpan(std::string_view needle, const std::vector<std::string>& words);
double BestSpanSimilarity(std::string_view needle, const std::vector<std::string>& words);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerificationReport {
  std::string doc_id;
  Task task = Task::kVqa;
  std::vector<Check> checks;
  std::vector<double> anls_scores;
  std::optional<RejectReason> reject;

  bool accepted() const { return !reject.has_value(); }
  // Mean of anls_scores, 0 when there are none.
  double mean_anls() const;
  // Records a check; the first failing check decides the verdict.
  void Add(std::string name, bool pass, std::string detail, RejectReason on_fail);
};

nlohmann::ordered_json ReportToJson(const VerificationReport& r);

VerificationReport VerifyVqa(const synthesis::QaPairs& gt, const std::vector<std::string>& words,
                             double tau = kDefaultTau);
VerificationReport VerifyCls(const synthesis::ClassLabel& gt,
                             const std::vector<std::string>& vocabulary);
// Fields must be in `vocabulary` (skipped when it is empty). Entities with a
// region must match inside it, 1 px slack.
VerificationReport VerifyKie(const synthesis::KieEntities& gt,
                             const std::vector<rendering::OcrWord>& words,
                             const std::vector<std::string>& vocabulary, double tau = kDefaultTau);
VerificationReport VerifyDla(const synthesis::LayoutRegions& gt, const Box& page,
                             const std::vector<std::string>& vocabulary);

// Copies rendered element boxes into KIE entities and layout regions that
// carry element refs. Returns the refs that have no rendered box.
std::vector<std::string> AnchorGroundTruth(synthesis::GroundTruth& gt,
                                           const rendering::RenderResult& render);

struct VerifyContext {
  Task task = Task::kVqa;
  std::vector<std::string> vocabulary;
  double tau = kDefaultTau;
};

// multi_page first, then the task check. `words` are the document's text
// boxes (render text layer or OCR).
VerificationReport AcceptDocument(const synthesis::SynthesizedDocument& doc,
                                  const std::vector<rendering::OcrWord>& words,
                                  const VerifyContext& context);

}  // namespace docdjinn::verification

#endif  // DOCDJINN_VERIFICATION_VERIFY_H_
