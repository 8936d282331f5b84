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

#ifndef DOCDJINN_SYNTHESIS_PROMPT_H_
#define DOCDJINN_SYNTHESIS_PROMPT_H_

#include <string>
#include <string_view>

namespace docdjinn::synthesis {

// Macro: one JSON payload per document. Micro: class labels on elements.
enum class TemplateKind { kMacro, kMicro };

std::string_view TemplateKindName(TemplateKind kind);
// Accepts macro/micro as well as the dataset-file spellings JSON/annotation.
TemplateKind ParseTemplateKind(std::string_view name);

struct PromptSpec {
  TemplateKind template_kind = TemplateKind::kMacro;
  std::string language = "English";
  std::string doc_type;
  std::string gt_type;
  std::string gt_format;
  int num_solutions = 3;

  int num_seed_images() const { return 2 * num_solutions; }
  void Validate() const;
};

// Raw template text with {placeholders}.
std::string_view TemplateText(TemplateKind kind);

std::string InstantiatePrompt(const PromptSpec& spec);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_PROMPT_H_
