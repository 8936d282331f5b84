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

#include "docdjinn/verification/verify.h"

#include <algorithm>
#include <numeric>

#include "docdjinn/common/text.h"
#include "docdjinn/synthesis/document.h"

namespace docdjinn::verification {

size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::u32string NormalizeForMatch(std::string_view text) {
  std::u32string out = DecodeUtf8(CollapseWhitespace(text));
  for (char32_t& c : out) c = FoldCase(c);
  return out;
}

namespace {

double NlsNormalized(std::u32string_view a, std::u32string_view b) {
  const size_t n = std::max(a.size(), b.size());
  if (n == 0) return 1.0;
  return 1.0 - static_cast<double>(Levenshtein(a, b)) / static_cast<double>(n);
}

bool IsPunct(char32_t c) {
  if (c < 0x80) return c > 0x20 && c < 0x7f && !std::isalnum(static_cast<int>(c));
  return std::u32string_view(U"¡«·»¿–—‘’‚“"
                             U"”„•…、。")
             .find(c) != std::u32string_view::npos;
}

std::u32string StripEdgePunct(std::u32string s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && IsPunct(s[b])) ++b;
  while (e > b && IsPunct(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

double Nls(std::string_view a, std::string_view b) {
  return NlsNormalized(NormalizeForMatch(a), NormalizeForMatch(b));
}

SpanMatch BestSpan(std::string_view needle, const std::vector<std::string>& words) {
  SpanMatch best;
  if (words.empty()) return best;
  const std::u32string target = NormalizeForMatch(needle);
  const size_t max_len = SplitWhitespace(needle).size() + 1;
  std::vector<std::u32string> norm;
  norm.reserve(words.size());
  for (const auto& w : words) norm.push_back(NormalizeForMatch(w));
  for (size_t i = 0; i < norm.size(); ++i) {
    std::u32string window;
    for (size_t len = 1; len <= max_len && i + len <= norm.size(); ++len) {
      if (len > 1) window += U' ';
      window += norm[i + len - 1];
      const double s = NlsNormalized(target, StripEdgePunct(window));
      if (s > best.similarity) best = {s, i, i + len};
      if (best.similarity == 1.0) return best;
    }
  }
  return best;
}

double BestSpanSimilarity(std::string_view needle, const std::vector<std::string>& words) {
  return BestSpan(needle, words).similarity;
}

double VerificationReport::mean_anls() const {
  if (anls_scores.empty()) return 0.0;
  return std::accumulate(anls_scores.begin(), anls_scores.end(), 0.0) /
         static_cast<double>(anls_scores.size());
}

void VerificationReport::Add(std::string name, bool pass, std::string detail, RejectReason on_fail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
  if (!pass && !reject) reject = on_fail;
}

nlohmann::ordered_json ReportToJson(const VerificationReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  nlohmann::ordered_json j;
  j["doc_id"] = r.doc_id;
  j["task"] = TaskName(r.task);
  j["verdict"] = r.accepted() ? "accept" : "reject";
  j["reason"] = r.reject ? nlohmann::ordered_json(ReasonCode(*r.reject)) : nlohmann::ordered_json();
  j["anls_scores"] = r.anls_scores;
  j["checks"] = checks;
  return j;
}

namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

bool InVocabulary(const std::vector<std::string>& vocabulary, std::string_view label) {
  return synthesis::LookupLabel(vocabulary, label).has_value();
}

std::vector<std::string> Texts(const std::vector<rendering::OcrWord>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.text);
  return out;
}

}  // namespace

VerificationReport VerifyVqa(const synthesis::QaPairs& gt, const std::vector<std::string>& words,
                             double tau) {
  VerificationReport r;
  r.task = Task::kVqa;
  r.Add("qa_non_empty", !gt.pairs.empty(), "", RejectReason::kBadGt);
  for (const auto& qa : gt.pairs) {
    const double s = BestSpanSimilarity(qa.answer, words);
    r.anls_scores.push_back(s);
    r.Add("answer_in_text", s >= tau, qa.question + " -> " + qa.answer + " @ " + Fmt(s),
          RejectReason::kAnswerNotInText);
  }
  return r;
}

VerificationReport VerifyCls(const synthesis::ClassLabel& gt,
                             const std::vector<std::string>& vocabulary) {
  VerificationReport r;
  r.task = Task::kCls;
  r.Add("label_in_vocabulary", InVocabulary(vocabulary, gt.label), gt.label,
        RejectReason::kInvalidLabel);
  return r;
}

VerificationReport VerifyKie(const synthesis::KieEntities& gt,
                             const std::vector<rendering::OcrWord>& words,
                             const std::vector<std::string>& vocabulary, double tau) {
  VerificationReport r;
  r.task = Task::kKie;
  r.Add("entities_non_empty", !gt.entities.empty(), "", RejectReason::kBadGt);
  for (const auto& e : gt.entities) {
    const std::string name = (e.group.empty() ? "" : e.group + " ") + e.field;
    const bool known = e.valid && (vocabulary.empty() || InVocabulary(vocabulary, e.field));
    r.Add("field_label", known, name, RejectReason::kInvalidLabel);
  }
  const std::vector<std::string> all_texts = Texts(words);
  for (const auto& e : gt.entities) {
    const std::string name = (e.group.empty() ? "" : e.group + " ") + e.field;
    const double global = BestSpanSimilarity(e.value, all_texts);
    if (!e.region) {
      r.anls_scores.push_back(global);
      r.Add("value_in_text", global >= tau, name + " = " + e.value + " @ " + Fmt(global),
            RejectReason::kAnswerNotInText);
      continue;
    }
    std::vector<std::string> inside;
    for (const auto& w : words) {
      if (e.region->Contains(w.box, 1)) inside.push_back(w.text);
    }
    const double local = BestSpanSimilarity(e.value, inside);
    r.anls_scores.push_back(std::max(local, global));
    if (local >= tau) {
      r.Add("value_in_region", true, name + " @ " + Fmt(local), RejectReason::kOutOfBounds);
    } else if (global >= tau) {
      r.Add("value_in_region", false, name + " matched outside its region",
            RejectReason::kOutOfBounds);
    } else {
      r.Add("value_in_text", false, name + " = " + e.value + " @ " + Fmt(global),
            RejectReason::kAnswerNotInText);
    }
  }
  return r;
}

VerificationReport VerifyDla(const synthesis::LayoutRegions& gt, const Box& page,
                             const std::vector<std::string>& vocabulary) {
  VerificationReport r;
  r.task = Task::kDla;
  r.Add("regions_non_empty", !gt.regions.empty(), "", RejectReason::kBadGt);
  for (const auto& reg : gt.regions) {
    r.Add("label_in_vocabulary", InVocabulary(vocabulary, reg.label), reg.label,
          RejectReason::kInvalidLabel);
  }
  for (const auto& reg : gt.regions) {
    const bool inside = reg.box && reg.box->valid() && !reg.box->empty() && page.Contains(*reg.box);
    std::string detail = reg.label + " " + reg.element_ref;
    if (reg.box) {
      detail += " [" + std::to_string(reg.box->left) + "," + std::to_string(reg.box->top) + "," +
                std::to_string(reg.box->right) + "," + std::to_string(reg.box->bottom) + "]";
    } else {
      detail += " no box";
    }
    r.Add("region_within_page", inside, detail, RejectReason::kOutOfBounds);
  }
  return r;
}

std::vector<std::string> AnchorGroundTruth(synthesis::GroundTruth& gt,
                                           const rendering::RenderResult& render) {
  std::vector<std::string> missing;
  auto lookup = [&](const std::string& ref) -> std::optional<Box> {
    const auto it = render.element_boxes.find(ref);
    if (it != render.element_boxes.end()) return it->second;
    missing.push_back(ref);
    return std::nullopt;
  };
  if (auto* kie = std::get_if<synthesis::KieEntities>(&gt)) {
    for (auto& e : kie->entities) {
      if (!e.element_ref.empty()) e.region = lookup(e.element_ref);
    }
  } else if (auto* dla = std::get_if<synthesis::LayoutRegions>(&gt)) {
    for (auto& reg : dla->regions) {
      if (!reg.element_ref.empty()) reg.box = lookup(reg.element_ref);
    }
  }
  return missing;
}

VerificationReport AcceptDocument(const synthesis::SynthesizedDocument& doc,
                                  const std::vector<rendering::OcrWord>& words,
                                  const VerifyContext& context) {
  VerificationReport r;
  r.task = context.task;
  const int pages = doc.render() ? doc.render()->page_count : 0;
  if (!doc.render()) {
    r.Add("rendered", false, "", RejectReason::kRenderFail);
  } else if (pages > 1) {
    r.Add("single_page", false, std::to_string(pages) + " pages", RejectReason::kMultiPage);
  } else if (!doc.gt) {
    r.Add("has_gt", false, "", RejectReason::kNoGt);
  } else {
    r.Add("single_page", true, "", RejectReason::kMultiPage);
    VerificationReport task;
    const auto& gt = *doc.gt;
    switch (context.task) {
      case Task::kVqa:
        if (const auto* qa = std::get_if<synthesis::QaPairs>(&gt)) task = VerifyVqa(*qa, Texts(words), context.tau);
        break;
      case Task::kCls:
        if (const auto* c = std::get_if<synthesis::ClassLabel>(&gt)) task = VerifyCls(*c, context.vocabulary);
        break;
      case Task::kKie:
        if (const auto* k = std::get_if<synthesis::KieEntities>(&gt)) task = VerifyKie(*k, words, context.vocabulary, context.tau);
        break;
      case Task::kDla:
        if (const auto* d = std::get_if<synthesis::LayoutRegions>(&gt)) task = VerifyDla(*d, doc.render()->page_box(), context.vocabulary);
        break;
    }
    if (task.checks.empty()) {
      r.Add("gt_matches_task", false, "ground truth does not fit the task", RejectReason::kBadGt);
    }
    for (auto& c : task.checks) r.checks.push_back(std::move(c));
    r.anls_scores = std::move(task.anls_scores);
    if (!r.reject) r.reject = task.reject;
  }
  r.doc_id = doc.id();
  return r;
}

}  // namespace docdjinn::verification
