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

#include "docdjinn/handwriting/generator.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <opencv2/imgproc.hpp>

#include "docdjinn/common/rng.h"
#include "docdjinn/common/text.h"

namespace docdjinn::handwriting {

namespace {

bool IsAscender(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9') ||
         std::u32string_view(U"bdfhklt").find(c) != std::u32string_view::npos;
}

bool IsDescender(char32_t c) {
  return std::u32string_view(U"gjpqy").find(c) != std::u32string_view::npos;
}

}  // namespace

StubWordGenerator::StubWordGenerator(StubGeneratorOptions options) : options_(std::move(options)) {
  DOCDJINN_CHECK_ARG(!options_.writers.empty(), "stub generator needs at least one writer");
}

InkImage StubWordGenerator::Generate(std::string_view text, int writer_id, uint64_t seed) {
  if (std::find(options_.writers.begin(), options_.writers.end(), writer_id) ==
      options_.writers.end()) {
    throw UnknownWriterError("unknown writer " + std::to_string(writer_id));
  }
  DOCDJINN_CHECK_ARG(!text.empty(), "cannot generate empty text");
  Rng rng(MixSeed(MixSeed(seed, StableHash(text)), static_cast<uint64_t>(writer_id)));
  const std::u32string cps = DecodeUtf8(text);
  const int n = static_cast<int>(cps.size());

  const int baseline = 72 + (writer_id * 5) % 17;
  const int x_height = 26 + (writer_id * 3) % 9;
  const int thick = 2 + writer_id % 2;
  const int margin = 8;
  const int advance = std::min(22 + (writer_id % 5) * 2, (kCanonicalWidth - 2 * margin) / n);
  DOCDJINN_CHECK_ARG(advance >= 4, "text too long for one word image");

  InkImage ink;
  ink.alpha = cv::Mat::zeros(kCanonicalHeight, kCanonicalWidth, CV_8UC1);
  ink.intensity = cv::Mat(kCanonicalHeight, kCanonicalWidth, CV_8UC1,
                          cv::Scalar(20 + 4 * (writer_id % 10)));
  ink.known_baseline = baseline;

  const double slant = 0.15 * ((writer_id % 3) - 1);
  for (int i = 0; i < n; ++i) {
    const int x0 = margin + i * advance;
    // Ligature along the baseline.
    cv::rectangle(ink.alpha, cv::Point(x0, baseline - thick + 1),
                  cv::Point(x0 + advance - 1, baseline), cv::Scalar(255), cv::FILLED);
    const double top = baseline - (IsAscender(cps[i]) ? 1.8 : 1.0) * x_height * rng.Uniform(0.9, 1.0);
    const double low = baseline - thick;
    const double freq = 1.0 + static_cast<double>(rng.UniformIndex(2));
    const double phase = rng.Uniform(0.0, 0.25);
    std::vector<cv::Point> pts;
    const int steps = 24;
    for (int s = 0; s <= steps; ++s) {
      const double u = static_cast<double>(s) / steps;
      const double wave = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (u * freq + phase));
      const double y = low - (low - top) * wave;
      double x = x0 + thick + u * (advance - 2 * thick - 1) + slant * (low - y);
      x = std::clamp(x, static_cast<double>(x0 + thick), static_cast<double>(x0 + advance - thick - 1));
      pts.emplace_back(static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y)));
    }
    cv::polylines(ink.alpha, pts, false, cv::Scalar(255), thick, cv::LINE_8);
    if (options_.descenders && IsDescender(cps[i])) {
      const int dx = x0 + advance / 2;
      const int depth = std::min(kCanonicalHeight - 2, baseline + static_cast<int>(0.8 * x_height));
      cv::line(ink.alpha, cv::Point(dx, baseline), cv::Point(dx, depth), cv::Scalar(255), thick,
               cv::LINE_8);
    }
  }
  return ink;
}

int WriterFor(std::string_view doc_id, int author_id, const std::vector<int>& writers) {
  DOCDJINN_CHECK_ARG(!writers.empty(), "writer set is empty");
  const std::string key = std::string(doc_id) + "#" + std::to_string(author_id);
  return writers[StableHash(key) % writers.size()];
}

}  // namespace docdjinn::handwriting
