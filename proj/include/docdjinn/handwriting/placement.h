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

#ifndef DOCDJINN_HANDWRITING_PLACEMENT_H_
#define DOCDJINN_HANDWRITING_PLACEMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "docdjinn/common/image.h"
#include "docdjinn/common/rng.h"
#include "docdjinn/handwriting/generator.h"
#include "docdjinn/handwriting/postprocess.h"
#include "docdjinn/rendering/render.h"
#include "docdjinn/synthesis/regions.h"

namespace docdjinn::handwriting {

inline constexpr int kDefaultJitterPx = 2;

// Box the line ends up in after fitting, centring and jitter, before the
// raster is resampled. Throws InvalidArgument when the word-box union is
// empty.
Box FitLineBox(int line_width, int line_height, const Box& target, int jitter_x, int jitter_y);

// Scales `line` (aspect kept) into the union of the region's word boxes,
// centres it, shifts it by a uniform draw in [-jitter, jitter] per axis and
// clamps the result into `page`.
Overlay PlaceLine(const InkImage& line, const synthesis::HandwritingRegion& region,
                  const Box& page, Rng& rng, int jitter = kDefaultJitterPx,
                  const cv::Scalar& ink_color = cv::Scalar(110, 40, 20));

struct HandwritingOptions {
  int spacing = kDefaultSpacing;
  int tau = kDefaultTau;
  int jitter = kDefaultJitterPx;
  PostprocessParams postprocess;
  cv::Scalar ink_color = cv::Scalar(110, 40, 20);  // BGR, dark blue
};

// Words are split into sub-segments, generated, cropped to their ink and
// joined without gaps; words are then joined with options.spacing.
InkImage SynthesizeLine(WordGenerator& generator, const std::string& text, int writer_id,
                        uint64_t seed, const HandwritingOptions& options = {});

// Copies the element box and the boxes of the words the element holds.
void AttachRenderBoxes(std::vector<synthesis::HandwritingRegion>& regions,
                       const rendering::RenderResult& render);

struct HandwritingResult {
  std::vector<Overlay> overlays;
  std::vector<std::string> warnings;  // regions that were skipped
};

// Assigns writers, synthesizes, post-processes and places every region.
// Regions without word boxes are skipped with a warning.
HandwritingResult RenderHandwriting(std::vector<synthesis::HandwritingRegion>& regions,
                                    const std::string& doc_id, WordGenerator& generator,
                                    const Box& page, uint64_t seed,
                                    const HandwritingOptions& options = {});

// Paints the boxes white so typeset text does not show under the ink.
void EraseBoxes(cv::Mat& page_bgr, const std::vector<Box>& boxes);

}  // namespace docdjinn::handwriting

#endif  // DOCDJINN_HANDWRITING_PLACEMENT_H_
