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

#include "docdjinn/handwriting/postprocess.h"

#include <cmath>

#include <opencv2/imgproc.hpp>

namespace docdjinn::handwriting {

PostprocessParams PostprocessParams::Identity() {
  PostprocessParams p;
  p.blur_radius_min = p.blur_radius_max = 0.0;
  p.antialias_scale = 1.0;
  p.contrast = 1.0;
  p.gamma = 1.0;
  p.noise_sigma = 0.0;
  p.unsharp = false;
  return p;
}

namespace {

void Blur(cv::Mat& m, double sigma) {
  cv::GaussianBlur(m, m, cv::Size(0, 0), sigma, sigma, cv::BORDER_CONSTANT);
}

void Resample(cv::Mat& m, double scale) {
  const cv::Size full = m.size();
  const cv::Size small(std::max(1, static_cast<int>(std::lround(full.width * scale))),
                       std::max(1, static_cast<int>(std::lround(full.height * scale))));
  cv::Mat tmp;
  cv::resize(m, tmp, small, 0, 0, cv::INTER_AREA);
  cv::resize(tmp, m, full, 0, 0, cv::INTER_LINEAR);
}

template <typename F>
void MapTone(cv::Mat& tone, F f) {
  for (int y = 0; y < tone.rows; ++y) {
    auto* row = tone.ptr<uint8_t>(y);
    for (int x = 0; x < tone.cols; ++x) row[x] = cv::saturate_cast<uint8_t>(f(row[x], y, x));
  }
}

}  // namespace

InkImage Postprocess(const InkImage& line, const PostprocessParams& params, Rng& rng) {
  DOCDJINN_CHECK_ARG(params.blur_radius_min >= 0 && params.blur_radius_max >= params.blur_radius_min,
                     "bad blur radius range");
  DOCDJINN_CHECK_ARG(params.antialias_scale > 0 && params.antialias_scale <= 1,
                     "antialias scale must be in (0, 1]");
  InkImage out = line.Clone();
  const bool tonal = params.contrast != 1.0 || params.gamma != 1.0 || params.noise_sigma > 0 ||
                     params.unsharp;
  if (out.intensity.empty() && tonal) out.intensity = cv::Mat::zeros(out.alpha.size(), CV_8UC1);

  const double sigma = rng.Uniform(params.blur_radius_min, params.blur_radius_max);
  if (sigma > 0) {
    Blur(out.alpha, sigma);
    if (!out.intensity.empty()) Blur(out.intensity, sigma);
  }
  if (params.antialias_scale < 1.0) {
    Resample(out.alpha, params.antialias_scale);
    if (!out.intensity.empty()) Resample(out.intensity, params.antialias_scale);
  }
  if (out.intensity.empty()) return out;

  if (params.contrast != 1.0) {
    const cv::Scalar mean = cv::mean(out.intensity, out.alpha > 0);
    const double pivot = std::floor(mean[0] + 0.5);
    MapTone(out.intensity, [&](uint8_t v, int, int) {
      return std::lround(pivot + params.contrast * (v - pivot));
    });
  }
  if (params.gamma != 1.0) {
    MapTone(out.intensity, [&](uint8_t v, int, int) {
      return std::lround(255.0 * std::pow(v / 255.0, params.gamma));
    });
  }
  if (params.noise_sigma > 0) {
    MapTone(out.intensity, [&](uint8_t v, int, int) {
      return std::lround(v + params.noise_sigma * rng.Normal());
    });
  }
  if (params.unsharp) {
    cv::Mat blurred;
    cv::GaussianBlur(out.intensity, blurred, cv::Size(0, 0), params.unsharp_radius,
                     params.unsharp_radius, cv::BORDER_REPLICATE);
    MapTone(out.intensity, [&](uint8_t v, int y, int x) {
      const int diff = static_cast<int>(v) - blurred.at<uint8_t>(y, x);
      if (std::abs(diff) < params.unsharp_threshold) return static_cast<long>(v);
      return std::lround(v + diff * params.unsharp_percent / 100.0);
    });
  }
  return out;
}

}  // namespace docdjinn::handwriting
