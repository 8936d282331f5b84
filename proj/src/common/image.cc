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

#include "docdjinn/common/image.h"

#include <fstream>
#include <vector>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "docdjinn/common/error.h"
#include "docdjinn/common/rng.h"

namespace docdjinn {

void BlendOver(cv::Mat& page_bgr, const cv::Mat& bgra, int left, int top) {
  CV_Assert(page_bgr.type() == CV_8UC3 && bgra.type() == CV_8UC4);
  for (int y = 0; y < bgra.rows; ++y) {
    const int py = top + y;
    if (py < 0 || py >= page_bgr.rows) continue;
    const cv::Vec4b* src = bgra.ptr<cv::Vec4b>(y);
    cv::Vec3b* dst = page_bgr.ptr<cv::Vec3b>(py);
    for (int x = 0; x < bgra.cols; ++x) {
      const int px = left + x;
      if (px < 0 || px >= page_bgr.cols) continue;
      const int a = src[x][3];
      if (a == 0) continue;
      for (int c = 0; c < 3; ++c) {
        const int blended = (src[x][c] * a + dst[px][c] * (255 - a) + 127) / 255;
        dst[px][c] = static_cast<uchar>(blended);
      }
    }
  }
}

std::string EncodePng(const cv::Mat& image) {
  std::vector<uchar> buf;
  const std::vector<int> params{cv::IMWRITE_PNG_COMPRESSION, 6};
  if (!cv::imencode(".png", image, buf, params)) {
    throw Error("PNG encoding failed");
  }
  return std::string(buf.begin(), buf.end());
}

void WritePng(const std::filesystem::path& path, const cv::Mat& image) {
  const std::string bytes = EncodePng(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

cv::Mat LoadBgra(const std::filesystem::path& path) {
  cv::Mat raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (raw.empty()) throw Error("cannot decode image " + path.string());
  if (raw.depth() != CV_8U) {
    raw.convertTo(raw, CV_8U, raw.depth() == CV_16U ? 1.0 / 257.0 : 1.0);
  }
  cv::Mat out;
  switch (raw.channels()) {
    case 1: cv::cvtColor(raw, out, cv::COLOR_GRAY2BGRA); break;
    case 3: cv::cvtColor(raw, out, cv::COLOR_BGR2BGRA); break;
    case 4: out = raw; break;
    default: throw Error("unsupported channel count in " + path.string());
  }
  return out;
}

uint64_t PixelHash(const cv::Mat& image) {
  std::string bytes = std::to_string(image.rows) + "x" +
                      std::to_string(image.cols) + "x" +
                      std::to_string(image.type()) + ":";
  cv::Mat cont = image.isContinuous() ? image : image.clone();
  bytes.append(reinterpret_cast<const char*>(cont.data),
               cont.total() * cont.elemSize());
  return StableHash(bytes);
}

}  // namespace docdjinn
