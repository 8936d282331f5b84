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

#include "docdjinn/handwriting/ink.h"

#include <algorithm>
#include <cmath>

#include "docdjinn/common/text.h"

namespace docdjinn::handwriting {

InkImage InkImage::Clone() const {
  return {alpha.clone(), intensity.clone(), known_baseline};
}

std::vector<std::string> SegmentWord(std::string_view word, int max_len) {
  DOCDJINN_CHECK_ARG(!word.empty(), "cannot segment an empty word");
  DOCDJINN_CHECK_ARG(max_len > 0, "max_len must be positive");
  const std::u32string cps = DecodeUtf8(word);
  for (char32_t c : cps) {
    DOCDJINN_CHECK_ARG(c != U' ' && c != U'\t' && c != U'\n' && c != U'\r',
                       "word contains whitespace");
  }
  const size_t n = cps.size();
  const size_t k = (n + static_cast<size_t>(max_len) - 1) / static_cast<size_t>(max_len);
  std::vector<std::string> out;
  size_t pos = 0;
  for (size_t i = 0; i < k; ++i) {
    const size_t len = n / k + (i < n % k ? 1 : 0);
    out.push_back(EncodeUtf8(cps.substr(pos, len)));
    pos += len;
  }
  return out;
}

double Percentile(std::vector<double> values, double p) {
  DOCDJINN_CHECK_ARG(!values.empty(), "percentile of an empty set");
  DOCDJINN_CHECK_ARG(p >= 0.0 && p <= 100.0, "percentile must be in [0, 100]");
  std::sort(values.begin(), values.end());
  const double rank = p / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(rank));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return values[lo] + (values[hi] - values[lo]) * frac;
}

std::vector<int> ColumnBottoms(const cv::Mat& alpha, int tau) {
  CV_Assert(alpha.type() == CV_8UC1);
  std::vector<int> bottoms;
  for (int x = 0; x < alpha.cols; ++x) {
    for (int y = alpha.rows - 1; y >= 0; --y) {
      if (alpha.at<uint8_t>(y, x) > tau) {
        bottoms.push_back(y);
        break;
      }
    }
  }
  return bottoms;
}

int EstimateBaseline(const InkImage& ink, int tau, double p) {
  const auto bottoms = ColumnBottoms(ink.alpha, tau);
  if (bottoms.empty()) throw EmptyInkError("no ink above threshold " + std::to_string(tau));
  const std::vector<double> values(bottoms.begin(), bottoms.end());
  return static_cast<int>(std::lround(Percentile(values, p)));
}

InkImage ComposeLine(const std::vector<InkImage>& segments, int spacing, int tau) {
  DOCDJINN_CHECK_ARG(!segments.empty(), "no segments to compose");
  DOCDJINN_CHECK_ARG(spacing >= 0, "spacing must be non-negative");
  std::vector<int> baselines;
  bool any_intensity = false;
  for (const auto& s : segments) {
    baselines.push_back(EstimateBaseline(s, tau));
    any_intensity = any_intensity || !s.intensity.empty();
  }
  const int common = *std::max_element(baselines.begin(), baselines.end());
  int width = spacing * static_cast<int>(segments.size() - 1);
  int height = 0;
  for (size_t i = 0; i < segments.size(); ++i) {
    width += segments[i].width();
    height = std::max(height, common - baselines[i] + segments[i].height());
  }
  InkImage line;
  line.alpha = cv::Mat::zeros(height, width, CV_8UC1);
  if (any_intensity) line.intensity = cv::Mat(height, width, CV_8UC1, cv::Scalar(255));
  int x = 0;
  for (size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    const cv::Rect dst(x, common - baselines[i], s.width(), s.height());
    s.alpha.copyTo(line.alpha(dst));
    if (any_intensity) {
      if (s.intensity.empty()) line.intensity(dst).setTo(0);
      else s.intensity.copyTo(line.intensity(dst));
    }
    x += s.width() + spacing;
  }
  line.known_baseline = common;
  return line;
}

InkImage CropColumns(const InkImage& ink, int tau, int margin) {
  int first = -1;
  int last = -1;
  for (int x = 0; x < ink.width(); ++x) {
    double max_v = 0;
    cv::minMaxLoc(ink.alpha.col(x), nullptr, &max_v);
    if (max_v > tau) {
      if (first < 0) first = x;
      last = x;
    }
  }
  if (first < 0) throw EmptyInkError("no ink above threshold " + std::to_string(tau));
  first = std::max(0, first - margin);
  last = std::min(ink.width() - 1, last + margin);
  const cv::Rect r(first, 0, last - first + 1, ink.height());
  InkImage out;
  out.alpha = ink.alpha(r).clone();
  if (!ink.intensity.empty()) out.intensity = ink.intensity(r).clone();
  out.known_baseline = ink.known_baseline;
  return out;
}

cv::Mat ToBgra(const InkImage& ink, const cv::Scalar& color) {
  cv::Mat out(ink.height(), ink.width(), CV_8UC4);
  for (int y = 0; y < ink.height(); ++y) {
    for (int x = 0; x < ink.width(); ++x) {
      const double t = ink.intensity.empty() ? 0.0 : ink.intensity.at<uint8_t>(y, x) / 255.0;
      cv::Vec4b& px = out.at<cv::Vec4b>(y, x);
      for (int c = 0; c < 3; ++c) {
        px[c] = cv::saturate_cast<uint8_t>(color[c] + (255.0 - color[c]) * t);
      }
      px[3] = ink.alpha.at<uint8_t>(y, x);
    }
  }
  return out;
}

}  // namespace docdjinn::handwriting
