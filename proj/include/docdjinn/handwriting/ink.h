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

#ifndef DOCDJINN_HANDWRITING_INK_H_
#define DOCDJINN_HANDWRITING_INK_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>

#include "docdjinn/common/error.h"

namespace docdjinn::handwriting {

inline constexpr int kCanonicalHeight = 128;
inline constexpr int kCanonicalWidth = 512;
inline constexpr int kDefaultTau = 16;
inline constexpr int kDefaultSpacing = 32;  // 0.25 x canonical height

// Word or line ink. `alpha` carries coverage; `intensity` the ink tone
// (0 black, 255 white) and may be empty, meaning black ink.
struct InkImage {
  cv::Mat alpha;      // CV_8UC1
  cv::Mat intensity;  // CV_8UC1 or empty
  // Planted by test generators and recorded by ComposeLine.
  std::optional<int> known_baseline;

  int width() const { return alpha.cols; }
  int height() const { return alpha.rows; }
  InkImage Clone() const;
};

class EmptyInkError : public Error {
 public:
  using Error::Error;
};

// Splits a word into ceil(len/6) contiguous pieces whose lengths differ by at
// most one, longer pieces first. Length counts code points.
std::vector<std::string> SegmentWord(std::string_view word, int max_len = 6);

// Percentile with linear interpolation between closest ranks (numpy's
// default), p in [0, 100].
double Percentile(std::vector<double> values, double p);

// Per column with any alpha > tau, the lowest such row; empty columns are
// skipped.
std::vector<int> ColumnBottoms(const cv::Mat& alpha, int tau);

// Percentile-p of the column bottoms, rounded to the nearest row. Throws
// EmptyInkError when no pixel exceeds tau.
int EstimateBaseline(const InkImage& ink, int tau = kDefaultTau, double p = 50.0);

// Aligns every segment's estimated baseline to the lowest one and
// concatenates them left to right with `spacing` blank columns in between.
// The output records the common baseline in known_baseline.
InkImage ComposeLine(const std::vector<InkImage>& segments, int spacing = kDefaultSpacing,
                     int tau = kDefaultTau);

// Crops to the columns holding ink above tau (full height kept), with
// `margin` blank columns retained on each side.
InkImage CropColumns(const InkImage& ink, int tau = kDefaultTau, int margin = 0);

// BGRA raster of the ink in `color`, modulated by intensity when present.
cv::Mat ToBgra(const InkImage& ink, const cv::Scalar& color = cv::Scalar(0, 0, 0));

}  // namespace docdjinn::handwriting

#endif  // DOCDJINN_HANDWRITING_INK_H_
