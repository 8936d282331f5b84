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

#ifndef DOCDJINN_COMMON_TASK_H_
#define DOCDJINN_COMMON_TASK_H_

#include <optional>
#include <string>
#include <string_view>

namespace docdjinn {

// Annotation task families.
enum class Task { kVqa, kKie, kCls, kDla };

std::string_view TaskName(Task task);
// Accepts VQA/KIE/CLS/DLA (case-insensitive); "classification" is an alias
// of CLS.
Task ParseTask(std::string_view name);

// Closed set of machine-readable rejection codes.
enum class RejectReason {
  kNoGt,
  kBadGt,
  kInvalidLabel,
  kAnswerNotInText,
  kOutOfBounds,
  kMultiPage,
  kRenderFail,
  kOcrFail,
};

std::string_view ReasonCode(RejectReason reason);
std::optional<RejectReason> ParseReasonCode(std::string_view code);

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_TASK_H_
