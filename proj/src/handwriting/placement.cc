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

#include "docdjinn/handwriting/placement.h"

#include <algorithm>
#include <cmath>

#include <opencv2/imgproc.hpp>

#include "docdjinn/common/text.h"

namespace docdjinn::handwriting {

Box FitLineBox(int line_width, int line_height, const Box& target, int jitter_x, int jitter_y) {
  DOCDJINN_CHECK_ARG(line_width > 0 && line_height > 0, "line has no extent");
  DOCDJINN_CHECK_ARG(!target.empty(), "word-box union is degenerate");
  const double scale = std::min(static_cast<double>(target.width()) / line_width,
                                static_cast<double>(target.height()) / line_height);
  const int w = std::max(1, static_cast<int>(std::lround(line_width * scale)));
  const int h = std::max(1, static_cast<int>(std::lround(line_height * scale)));
  const int left = target.left + (target.width() - w) / 2 + jitter_x;
  const int top = target.top + (target.height() - h) / 2 + jitter_y;
  return {left, top, left + w, top + h};
}

Overlay PlaceLine(const InkImage& line, const synthesis::HandwritingRegion& region,
                  const Box& page, Rng& rng, int jitter, const cv::Scalar& ink_color) {
  DOCDJINN_CHECK_ARG(!region.word_boxes.empty(), "region has no word boxes");
  DOCDJINN_CHECK_ARG(jitter >= 0, "jitter must be non-negative");
  const Box target = *UnionAll(region.word_boxes);
  const int jx = rng.UniformInt(-jitter, jitter);
  const int jy = rng.UniformInt(-jitter, jitter);
  const Box box = ClampInto(FitLineBox(line.width(), line.height(), target, jx, jy), page);
  DOCDJINN_CHECK_ARG(!box.empty(), "placement box is empty");
  Overlay out;
  cv::resize(ToBgra(line, ink_color), out.bgra, cv::Size(box.width(), box.height()), 0, 0,
             cv::INTER_AREA);
  out.box = box;
  return out;
}

InkImage SynthesizeLine(WordGenerator& generator, const std::string& text, int writer_id,
                        uint64_t seed, const HandwritingOptions& options) {
  const auto words = SplitWhitespace(text);
  DOCDJINN_CHECK_ARG(!words.empty(), "handwriting text is empty");
  std::vector<InkImage> word_inks;
  uint64_t part = 0;
  for (const auto& word : words) {
    std::vector<InkImage> pieces;
    for (const auto& seg : SegmentWord(word)) {
      const InkImage ink = generator.Generate(seg, writer_id, MixSeed(seed, part++));
      pieces.push_back(CropColumns(ink, options.tau));
    }
    word_inks.push_back(ComposeLine(pieces, 0, options.tau));
  }
  return ComposeLine(word_inks, options.spacing, options.tau);
}

void AttachRenderBoxes(std::vector<synthesis::HandwritingRegion>& regions,
                       const rendering::RenderResult& render) {
  for (auto& r : regions) {
    r.word_boxes.clear();
    const auto it = render.element_boxes.find(r.element_ref);
    r.region = it == render.element_boxes.end() ? Box{} : it->second;
    for (const auto& w : render.word_boxes) {
      if (w.element_ref == r.element_ref) r.word_boxes.push_back(w.box);
    }
  }
}

HandwritingResult RenderHandwriting(std::vector<synthesis::HandwritingRegion>& regions,
                                    const std::string& doc_id, WordGenerator& generator,
                                    const Box& page, uint64_t seed,
                                    const HandwritingOptions& options) {
  HandwritingResult out;
  for (size_t i = 0; i < regions.size(); ++i) {
    auto& r = regions[i];
    r.writer_id = WriterFor(doc_id, r.author_id, generator.writers());
    if (r.word_boxes.empty() || UnionAll(r.word_boxes)->empty()) {
      out.warnings.push_back("region " + r.element_ref + " has no rendered words");
      continue;
    }
    Rng rng(MixSeed(seed, i));
    const InkImage line = SynthesizeLine(generator, r.text, r.writer_id, rng.NextU64(), options);
    const InkImage processed = Postprocess(line, options.postprocess, rng);
    Overlay o = PlaceLine(processed, r, page, rng, options.jitter, options.ink_color);
    o.z_order = 0;
    out.overlays.push_back(std::move(o));
  }
  return out;
}

void EraseBoxes(cv::Mat& page_bgr, const std::vector<Box>& boxes) {
  const Box page{0, 0, page_bgr.cols, page_bgr.rows};
  for (const Box& b : boxes) {
    const Box c = Intersect(b, page);
    if (c.empty()) continue;
    page_bgr(cv::Rect(c.left, c.top, c.width(), c.height())).setTo(cv::Scalar(255, 255, 255));
  }
}

}  // namespace docdjinn::handwriting
