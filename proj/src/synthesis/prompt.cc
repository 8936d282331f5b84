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

#include "docdjinn/synthesis/prompt.h"

#include <string>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn::synthesis {

namespace {

constexpr std::string_view kPreamble = R"(You are an AI creating authentic HTML representations of documents based on seed images. Analyze the seed images for structural and semantic content and generate authentic variations. The generated documents will be printed.

## Requirements
1. **Authenticity**: Reflect stylistic elements from seed images without copying text/layouts verbatim
2. **Format**: Single-page documents with dimensions appropriate to the document type
3. **Language**: {language}
4. **Static Only**: No animations, transitions, or dynamic effects

## Technical
- Wrap each document in `<HTML>...</HTML>` tags, numbered sequentially
- Static CSS only for single-page layout
- Generate only minified CSS, HTML, JS.

## Content Guidelines
**DO**: Adapt cultural elements, vary layouts/colors/typography, use static styling
**DON'T**: Copy text/code blocks, reuse identical sections, include dynamic effects

## Handwritten Fields (if document type requires)
- Mark with class 'handwritten' and use regular text
- Apply no special styles to 'handwritten', except generously increased size, in line with realistic handwriting
- Assign author ID via class ('author1', 'author2', etc.) to distinguish different people
- If the handwriting represents a signature mark it additionally with class 'signature'

## Visual Placeholders (if document type requires)
- Insert `<div data-placeholder="type" style="...">` for non-text elements at appropriate positions
- Valid types are: stamp, logo, figure, barcode, photo
- Add data-content attribute with actual content description
- For stamps, use `position:absolute;z-index:10;` and specify 'top' and 'right'
- Always provide appropiate dimensions
- Example: `<div data-placeholder="stamp" data-content="APPROVED 2024-03-15" style="position:absolute;top:50mm;right:20mm;width:35mm;height:35mm;z-index:10;"></div>`
- Example: `<div data-placeholder="logo" data-content="ACME Corp Logo" style="width:150mm;height:100mm;"></div>`

## Output Format
Generate minified HTML like this:
```
1. <HTML><!DOCTYPE html><html ... document 1 ... </html></HTML>
2. <HTML><!DOCTYPE html><html ... document 2 ... </html></HTML>
...
```
)";

constexpr std::string_view kMacroGt = R"(## Ground Truth
Generate ground truth as JSON in `<script type="application/json" id="GT">...</script>` tag.
Ground truth specification: {gt_type}
Ground truth must follow the format: {gt_format}

## Quality Checklist
- [ ] Authentic variations without verbatim copying from seed images
- [ ] Static styling only (no animations or dynamic effects)
- [ ] Single-page format with minified HTML/CSS
- [ ] Content in {language}
- [ ] GT JSON present, correctly formatted and semantically coherent
- [ ] Visual elements are semantically coherent
)";

constexpr std::string_view kMicroGt = R"(## Ground Truth
Generate ground truth by assigning each applicable element in HTML a class from the list below to uniquely identify its label:
{gt_type}
{gt_format}


## Quality Checklist
- [ ] Authentic variations without verbatim copying from seed images
- [ ] Static styling only (no animations or dynamic effects)
- [ ] Single-page format with minified HTML/CSS
- [ ] Content in {language}
- [ ] GT labels via class annotations are present and assigned to correct elements
- [ ] Visual elements are semantically coherent
)";

constexpr std::string_view kClosing =
    "\nGenerate {num_solutions} distinct {doc_type} documents based on "
    "{num_seed_images} seed images.";

const std::string& Assembled(TemplateKind kind) {
  static const std::string macro =
      std::string(kPreamble) + std::string(kMacroGt) + std::string(kClosing);
  static const std::string micro =
      std::string(kPreamble) + std::string(kMicroGt) + std::string(kClosing);
  return kind == TemplateKind::kMacro ? macro : micro;
}

}  // namespace

std::string_view TemplateKindName(TemplateKind kind) {
  return kind == TemplateKind::kMacro ? "macro" : "micro";
}

TemplateKind ParseTemplateKind(std::string_view name) {
  const std::string lower = AsciiLower(Trim(name));
  if (lower == "macro" || lower == "json") return TemplateKind::kMacro;
  if (lower == "micro" || lower == "annotation") return TemplateKind::kMicro;
  throw InvalidArgument("unknown template kind: " + std::string(name));
}

void PromptSpec::Validate() const {
  DOCDJINN_CHECK_ARG(!Trim(language).empty(), "prompt: language is empty");
  DOCDJINN_CHECK_ARG(!Trim(doc_type).empty(), "prompt: doc_type is empty");
  DOCDJINN_CHECK_ARG(!Trim(gt_type).empty(), "prompt: gt_type is empty");
  DOCDJINN_CHECK_ARG(template_kind == TemplateKind::kMicro || !Trim(gt_format).empty(),
                     "prompt: gt_format is empty");
  DOCDJINN_CHECK_ARG(num_solutions >= 1, "prompt: num_solutions must be >= 1");
}

std::string_view TemplateText(TemplateKind kind) { return Assembled(kind); }

std::string InstantiatePrompt(const PromptSpec& spec) {
  spec.Validate();
  const std::string& out = Assembled(spec.template_kind);
  // One scan over the template; substituted values are never rescanned, so
  // braces inside gt_format survive.
  const std::string solutions = std::to_string(spec.num_solutions);
  const std::string seeds = std::to_string(spec.num_seed_images());
  std::string result;
  result.reserve(out.size() + spec.gt_type.size() + spec.gt_format.size());
  size_t pos = 0;
  while (pos < out.size()) {
    const size_t open = out.find('{', pos);
    if (open == std::string::npos) {
      result.append(out, pos, std::string::npos);
      break;
    }
    result.append(out, pos, open - pos);
    const size_t close = out.find('}', open);
    const std::string_view key =
        close == std::string::npos ? std::string_view()
                                   : std::string_view(out).substr(open + 1, close - open - 1);
    const std::string* value = nullptr;
    if (key == "language") value = &spec.language;
    else if (key == "doc_type") value = &spec.doc_type;
    else if (key == "gt_type") value = &spec.gt_type;
    else if (key == "gt_format") value = &spec.gt_format;
    else if (key == "num_solutions") value = &solutions;
    else if (key == "num_seed_images") value = &seeds;
    if (value) {
      result += Trim(*value);
      pos = close + 1;
    } else {
      result.push_back('{');
      pos = open + 1;
    }
  }
  return result;
}

}  // namespace docdjinn::synthesis
