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

#ifndef DOCDJINN_COMMON_IMAGE_H_
#define DOCDJINN_COMMON_IMAGE_H_

#include <filesystem>
#include <string>

#include <opencv2/core.hpp>

#include "docdjinn/common/geometry.h"

namespace docdjinn {

// An RGBA raster (stored BGRA, CV_8UC4) positioned on a page.
struct Overlay {
  cv::Mat bgra;
  Box box;
  int z_order = 0;
};

// Alpha-blends `bgra` over the BGR page with its top-left corner at
// (`left`, `top`). Pixels falling outside the page are skipped.
void BlendOver(cv::Mat& page_bgr, const cv::Mat& bgra, int left, int top);

// Lossless PNG encoding of any 8-bit 1/3/4 channel matrix.
std::string EncodePng(const cv::Mat& image);
void WritePng(const std::filesystem::path& path, const cv::Mat& image);

// Loads any raster OpenCV can decode and converts it to BGRA. Throws
// docdjinn::Error when the file cannot be decoded.
cv::Mat LoadBgra(const std::filesystem::path& path);

// FNV-1a hash over the pixel bytes plus the shape.
uint64_t PixelHash(const cv::Mat& image);

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_IMAGE_H_
