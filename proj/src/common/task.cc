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

#include "docdjinn/common/task.h"

#include <array>
#include <utility>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn {

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kVqa: return "VQA";
    case Task::kKie: return "KIE";
    case Task::kCls: return "CLS";
    case Task::kDla: return "DLA";
  }
  return "?";
}

Task ParseTask(std::string_view name) {
  const std::string lower = AsciiLower(Trim(name));
  if (lower == "vqa") return Task::kVqa;
  if (lower == "kie") return Task::kKie;
  if (lower == "cls" || lower == "classification") return Task::kCls;
  if (lower == "dla") return Task::kDla;
  throw InvalidArgument("unknown task type: " + std::string(name));
}

namespace {

constexpr std::array<std::pair<RejectReason, std::string_view>, 8> kReasonCodes{{
    {RejectReason::kNoGt, "no_gt"},
    {RejectReason::kBadGt, "bad_gt"},
    {RejectReason::kInvalidLabel, "invalid_label"},
    {RejectReason::kAnswerNotInText, "answer_not_in_text"},
    {RejectReason::kOutOfBounds, "out_of_bounds"},
    {RejectReason::kMultiPage, "multi_page"},
    {RejectReason::kRenderFail, "render_fail"},
    {RejectReason::kOcrFail, "ocr_fail"},
}};

}  // namespace

std::string_view ReasonCode(RejectReason reason) {
  for (const auto& [r, code] : kReasonCodes) {
    if (r == reason) return code;
  }
  return "unknown";
}

std::optional<RejectReason> ParseReasonCode(std::string_view code) {
  for (const auto& [r, c] : kReasonCodes) {
    if (c == code) return r;
  }
  return std::nullopt;
}

}  // namespace docdjinn
