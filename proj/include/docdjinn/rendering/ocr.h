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

#ifndef DOCDJINN_RENDERING_OCR_H_
#define DOCDJINN_RENDERING_OCR_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <opencv2/core.hpp>

#include "docdjinn/common/error.h"
#include "docdjinn/common/geometry.h"
#include "docdjinn/common/task.h"
#include "docdjinn/rendering/render.h"
#include "nlohmann/json.hpp"

namespace docdjinn::synthesis {
class SynthesizedDocument;
}

namespace docdjinn::rendering {

struct OcrWord {
  std::string text;
  Box box;
  double confidence = 1.0;
};

void to_json(nlohmann::json& j, const OcrWord& w);
void from_json(const nlohmann::json& j, OcrWord& w);

struct OcrRequest {
  std::string page_id;
  cv::Mat image;  // BGR
  // Render text layer of the same page; engines may ignore it.
  const std::vector<WordBox>* text_layer = nullptr;
};

class OcrError : public Error {
 public:
  using Error::Error;
};

class OcrEngine {
 public:
  virtual ~OcrEngine() = default;
  virtual std::string name() const = 0;
  // Throws OcrError.
  virtual std::vector<OcrWord> Recognize(const OcrRequest& request) = 0;
};

// Echoes the render text layer. Useful when no engine is installed and as a
// perfect-recognition fake.
class TextLayerOcr : public OcrEngine {
 public:
  std::string name() const override { return "text-layer"; }
  std::vector<OcrWord> Recognize(const OcrRequest& request) override;
};

// Reads precomputed results from <dir>/<page_id>.json, either a list of
// words or {"words": [...]}. A missing file is an OcrError.
class SidecarOcr : public OcrEngine {
 public:
  explicit SidecarOcr(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string name() const override { return "sidecar"; }
  std::vector<OcrWord> Recognize(const OcrRequest& request) override;

 private:
  std::filesystem::path dir_;
};

// Runs `command <image.png> <out.json>` and reads the words it writes.
class CommandOcr : public OcrEngine {
 public:
  explicit CommandOcr(std::string command) : command_(std::move(command)) {}
  std::string name() const override { return "command"; }
  std::vector<OcrWord> Recognize(const OcrRequest& request) override;

 private:
  std::string command_;
};

enum class TextRoute { kTextLayer, kOcr };

struct TextBoxes {
  TextRoute route = TextRoute::kTextLayer;
  std::vector<OcrWord> words;
  std::optional<RejectReason> reject;
  std::string detail;

  bool ok() const { return !reject.has_value(); }
};

// Documents carrying overlays go through `ocr`; typeset-only documents use
// the render text layer. A null engine on the OCR route, or an engine error,
// yields ocr_fail.
TextBoxes ExtractTextBoxes(const synthesis::SynthesizedDocument& doc, OcrEngine* ocr);

}  // namespace docdjinn::rendering

#endif  // DOCDJINN_RENDERING_OCR_H_
