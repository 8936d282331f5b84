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

#include "docdjinn/rendering/ocr.h"

#include <cstdlib>
#include <fstream>

#include "docdjinn/common/image.h"
#include "docdjinn/synthesis/document.h"

namespace docdjinn::rendering {

namespace fs = std::filesystem;

void to_json(nlohmann::json& j, const OcrWord& w) {
  j = {{"text", w.text}, {"box", w.box}, {"confidence", w.confidence}};
}

void from_json(const nlohmann::json& j, OcrWord& w) {
  w.text = j.at("text").get<std::string>();
  w.box = j.at("box").get<Box>();
  w.confidence = j.value("confidence", 1.0);
}

namespace {

std::vector<OcrWord> ReadWordsFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw OcrError("no OCR result at " + path.string());
  try {
    const auto j = nlohmann::json::parse(in);
    const auto& words = j.is_object() ? j.at("words") : j;
    return words.get<std::vector<OcrWord>>();
  } catch (const nlohmann::json::exception& e) {
    throw OcrError("malformed OCR result " + path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<OcrWord> TextLayerOcr::Recognize(const OcrRequest& request) {
  if (!request.text_layer) throw OcrError("no text layer for " + request.page_id);
  std::vector<OcrWord> out;
  out.reserve(request.text_layer->size());
  for (const WordBox& w : *request.text_layer) out.push_back({w.text, w.box, 1.0});
  return out;
}

std::vector<OcrWord> SidecarOcr::Recognize(const OcrRequest& request) {
  return ReadWordsFile(dir_ / (request.page_id + ".json"));
}

std::vector<OcrWord> CommandOcr::Recognize(const OcrRequest& request) {
  if (request.image.empty()) throw OcrError("empty page image for " + request.page_id);
  const fs::path dir = fs::temp_directory_path() /
                       ("docdjinn-ocr-" + std::to_string(PixelHash(request.image)));
  fs::create_directories(dir);
  const fs::path png = dir / "page.png";
  const fs::path out = dir / "words.json";
  WritePng(png, request.image);
  const std::string cmd = command_ + " '" + png.string() + "' '" + out.string() + "'";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) {
    fs::remove_all(dir);
    throw OcrError("OCR command exited with " + std::to_string(rc));
  }
  auto words = ReadWordsFile(out);
  fs::remove_all(dir);
  return words;
}

TextBoxes ExtractTextBoxes(const synthesis::SynthesizedDocument& doc, OcrEngine* ocr) {
  DOCDJINN_CHECK_ARG(doc.render().has_value(), "document " + doc.id() + " is not rendered");
  TextBoxes out;
  const RenderResult& render = *doc.render();
  if (!doc.has_overlays()) {
    for (const WordBox& w : render.word_boxes) out.words.push_back({w.text, w.box, 1.0});
    return out;
  }
  out.route = TextRoute::kOcr;
  if (!ocr) {
    out.reject = RejectReason::kOcrFail;
    out.detail = "no OCR engine configured";
    return out;
  }
  try {
    out.words = ocr->Recognize({doc.id(), doc.page_image(), &render.word_boxes});
  } catch (const Error& e) {
    out.reject = RejectReason::kOcrFail;
    out.detail = e.what();
  }
  return out;
}

}  // namespace docdjinn::rendering
