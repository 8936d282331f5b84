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

#include "docdjinn/visual_elements/elements.h"

#include <algorithm>
#include <cmath>

#include <opencv2/imgproc.hpp>
#include <spdlog/spdlog.h>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn::visual_elements {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 5> kTypeNames = {"stamp", "logo", "figure", "barcode",
                                                        "photo"};

}  // namespace

std::string_view TypeName(ElementType type) { return kTypeNames[static_cast<size_t>(type)]; }

std::optional<ElementType> MapType(std::string_view raw) {
  const std::string t = AsciiLower(Trim(raw));
  for (size_t i = 0; i < kTypeNames.size(); ++i) {
    if (t == kTypeNames[i]) return static_cast<ElementType>(i);
  }
  for (std::string_view f : {"chart", "diagram", "plot", "graph", "illustration", "infographic"}) {
    if (t == f) return ElementType::kFigure;
  }
  if (t == "image") return ElementType::kPhoto;
  if (t == "seal") return ElementType::kStamp;
  return std::nullopt;
}

// ---- stamps ----

StampStyle DrawStampStyle(Rng& rng) {
  static const std::array<cv::Scalar, 3> kInks = {
      cv::Scalar(40, 30, 200),   // red
      cv::Scalar(170, 70, 20),   // blue
      cv::Scalar(150, 40, 130),  // violet
  };
  StampStyle s;
  s.shape = rng.Bernoulli(0.5) ? StampShape::kCircle : StampShape::kRoundedRect;
  s.color = kInks[rng.UniformIndex(kInks.size())];
  s.angle_deg = rng.Uniform(-15.0, 15.0);
  return s;
}

cv::Mat RenderStamp(std::string_view content, int width, int height, Rng& rng) {
  return RenderStamp(content, width, height, DrawStampStyle(rng));
}

namespace {

constexpr int kStampFont = cv::FONT_HERSHEY_DUPLEX;

// Greedy split of `words` into `n` lines of similar character counts.
std::vector<std::string> BreakLines(const std::vector<std::string>& words, size_t n) {
  size_t total = 0;
  for (const auto& w : words) total += w.size() + 1;
  const double target = static_cast<double>(total) / static_cast<double>(n);
  std::vector<std::string> lines(1);
  for (const auto& w : words) {
    if (!lines.back().empty() && lines.size() < n &&
        static_cast<double>(lines.back().size() + w.size()) > target) {
      lines.emplace_back();
    }
    if (!lines.back().empty()) lines.back() += ' ';
    lines.back() += w;
  }
  return lines;
}

void DrawRoundedRect(cv::Mat& mask, const cv::Rect& r, int radius, int thickness) {
  radius = std::min({radius, r.width / 2, r.height / 2});
  const cv::Scalar ink(255);
  const int x0 = r.x, y0 = r.y, x1 = r.x + r.width, y1 = r.y + r.height;
  cv::line(mask, {x0 + radius, y0}, {x1 - radius, y0}, ink, thickness, cv::LINE_AA);
  cv::line(mask, {x0 + radius, y1}, {x1 - radius, y1}, ink, thickness, cv::LINE_AA);
  cv::line(mask, {x0, y0 + radius}, {x0, y1 - radius}, ink, thickness, cv::LINE_AA);
  cv::line(mask, {x1, y0 + radius}, {x1, y1 - radius}, ink, thickness, cv::LINE_AA);
  const cv::Size ax(radius, radius);
  cv::ellipse(mask, {x0 + radius, y0 + radius}, ax, 180, 0, 90, ink, thickness, cv::LINE_AA);
  cv::ellipse(mask, {x1 - radius, y0 + radius}, ax, 270, 0, 90, ink, thickness, cv::LINE_AA);
  cv::ellipse(mask, {x1 - radius, y1 - radius}, ax, 0, 0, 90, ink, thickness, cv::LINE_AA);
  cv::ellipse(mask, {x0 + radius, y1 - radius}, ax, 90, 0, 90, ink, thickness, cv::LINE_AA);
}

}  // namespace

cv::Mat RenderStamp(std::string_view content, int width, int height, const StampStyle& style) {
  DOCDJINN_CHECK_ARG(width > 0 && height > 0, "stamp box must be positive");
  cv::Mat mask = cv::Mat::zeros(height, width, CV_8UC1);
  const int side = std::min(width, height);
  const int thick = std::max(1, side / 30);
  const cv::Point centre(width / 2, height / 2);
  double inner_w = 0;
  double inner_h = 0;
  if (style.shape == StampShape::kCircle) {
    const int radius = std::max(1, side / 2 - thick - 1);
    cv::circle(mask, centre, radius, cv::Scalar(255), thick, cv::LINE_AA);
    if (radius > 3 * thick + 2) {
      cv::circle(mask, centre, radius - 3 * thick, cv::Scalar(255), std::max(1, thick / 2), cv::LINE_AA);
    }
    inner_w = inner_h = 1.2 * radius;
  } else {
    const int mx = std::max(thick + 1, width / 10);
    const int my = std::max(thick + 1, height / 10);
    const cv::Rect r(mx, my, std::max(1, width - 2 * mx), std::max(1, height - 2 * my));
    DrawRoundedRect(mask, r, side / 8, thick);
    inner_w = 0.85 * r.width;
    inner_h = 0.8 * r.height;
  }

  const auto words = SplitWhitespace(content);
  if (!words.empty()) {
    // Pick the line count giving the largest glyphs.
    std::vector<std::string> best;
    double best_scale = 0;
    for (size_t n = 1; n <= std::min<size_t>(3, words.size()); ++n) {
      const auto lines = BreakLines(words, n);
      int max_w = 1;
      int line_h = 1;
      for (const auto& l : lines) {
        int base = 0;
        const cv::Size s = cv::getTextSize(l, kStampFont, 1.0, 1, &base);
        max_w = std::max(max_w, s.width);
        line_h = std::max(line_h, s.height + base);
      }
      const double scale = std::min(inner_w / max_w, inner_h / (1.2 * line_h * lines.size()));
      if (scale > best_scale) {
        best_scale = scale;
        best = lines;
      }
    }
    const int t = std::max(1, static_cast<int>(std::lround(best_scale * 1.5)));
    int base = 0;
    const int line_h =
        static_cast<int>(std::lround(1.2 * cv::getTextSize("Ag", kStampFont, best_scale, t, &base).height +
                                     base * 0.5));
    const int block_h = line_h * static_cast<int>(best.size());
    for (size_t i = 0; i < best.size(); ++i) {
      const cv::Size s = cv::getTextSize(best[i], kStampFont, best_scale, t, &base);
      const cv::Point org(centre.x - s.width / 2,
                          centre.y - block_h / 2 + line_h * static_cast<int>(i) + s.height);
      cv::putText(mask, best[i], org, kStampFont, best_scale, cv::Scalar(255), t, cv::LINE_AA);
    }
  }

  if (style.angle_deg != 0.0) {
    const cv::Mat rot = cv::getRotationMatrix2D(cv::Point2f(width / 2.0f, height / 2.0f),
                                                style.angle_deg, 1.0);
    cv::Mat rotated;
    cv::warpAffine(mask, rotated, rot, mask.size(), cv::INTER_LINEAR, cv::BORDER_CONSTANT);
    mask = rotated;
  }
  cv::Mat out(height, width, CV_8UC4);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const uint8_t m = mask.at<uint8_t>(y, x);
      out.at<cv::Vec4b>(y, x) = {static_cast<uint8_t>(style.color[0]),
                                 static_cast<uint8_t>(style.color[1]),
                                 static_cast<uint8_t>(style.color[2]),
                                 static_cast<uint8_t>(m * 9 / 10)};
    }
  }
  return out;
}

// ---- barcodes ----

const std::array<int, 7>& Code128Pattern(int value) {
  static const auto kTable = [] {
    static constexpr std::array<std::string_view, 107> kPatterns = {
        "212222", "222122", "222221", "121223", "121322", "131222", "122213", "122312",
        "132212", "221213", "221312", "231212", "112232", "122132", "122231", "113222",
        "123122", "123221", "223211", "221132", "221231", "213212", "223112", "312131",
        "311222", "321122", "321221", "312212", "322112", "322211", "212123", "212321",
        "232121", "111323", "131123", "131321", "112313", "132113", "132311", "211313",
        "231113", "231311", "112133", "112331", "132131", "113123", "113321", "133121",
        "313121", "211331", "231131", "213113", "213311", "213131", "311123", "311321",
        "331121", "312113", "312311", "332111", "314111", "221411", "431111", "111224",
        "111422", "121124", "121421", "141122", "141221", "112214", "112412", "122114",
        "122411", "142112", "142211", "241211", "221114", "413111", "241112", "134111",
        "111242", "121142", "121241", "114212", "124112", "124211", "411212", "421112",
        "421211", "212141", "214121", "412121", "111143", "111341", "131141", "114113",
        "114311", "411113", "411311", "113141", "114131", "311141", "411131", "211412",
        "211214", "211232", "2331112"};
    std::array<std::array<int, 7>, 107> t{};
    for (size_t i = 0; i < kPatterns.size(); ++i) {
      for (size_t j = 0; j < kPatterns[i].size(); ++j) t[i][j] = kPatterns[i][j] - '0';
    }
    return t;
  }();
  DOCDJINN_CHECK_ARG(value >= 0 && value <= 106, "Code 128 value out of range");
  return kTable[static_cast<size_t>(value)];
}

std::vector<int> EncodeCode128C(std::string_view digits) {
  DOCDJINN_CHECK_ARG(!digits.empty(), "nothing to encode");
  for (char c : digits) DOCDJINN_CHECK_ARG(c >= '0' && c <= '9', "set C encodes digits only");
  constexpr int kStartC = 105;
  constexpr int kCodeB = 100;
  constexpr int kStop = 106;
  std::vector<int> values = {kStartC};
  size_t i = 0;
  for (; i + 1 < digits.size(); i += 2) values.push_back((digits[i] - '0') * 10 + (digits[i + 1] - '0'));
  if (i < digits.size()) {
    values.push_back(kCodeB);
    values.push_back(digits[i] - ' ');  // set B value of the digit
  }
  long long sum = values[0];
  for (size_t k = 1; k < values.size(); ++k) sum += static_cast<long long>(k) * values[k];
  values.push_back(static_cast<int>(sum % 103));
  values.push_back(kStop);
  return values;
}

BarcodeEncoding EncodeBarcode(std::string_view content, Rng& rng) {
  BarcodeEncoding e;
  const std::string trimmed(Trim(content));
  const bool numeric = !trimmed.empty() && std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  if (numeric) {
    e.digits = trimmed;
  } else {
    e.fallback = true;
    for (int i = 0; i < 12; ++i) e.digits.push_back(static_cast<char>('0' + rng.UniformIndex(10)));
  }
  e.values = EncodeCode128C(e.digits);
  return e;
}

std::vector<int> BarcodeModules(const BarcodeEncoding& encoding) {
  std::vector<int> widths = {kQuietZoneModules};
  for (int v : encoding.values) {
    for (int w : Code128Pattern(v)) {
      if (w > 0) widths.push_back(w);
    }
  }
  widths.push_back(kQuietZoneModules);
  return widths;
}

cv::Mat RenderBarcode(const BarcodeEncoding& encoding, int width, int height) {
  DOCDJINN_CHECK_ARG(width > 0 && height > 0, "barcode box must be positive");
  const auto widths = BarcodeModules(encoding);
  int total = 0;
  for (int w : widths) total += w;
  const int module = std::max(1, width / total);
  const int text_h = height >= 40 ? height / 5 : 0;
  const int bar_h = height - text_h;
  cv::Mat strip(bar_h, total * module, CV_8UC1, cv::Scalar(255));
  int x = 0;
  for (size_t i = 0; i < widths.size(); ++i) {
    const int w = widths[i] * module;
    if (i % 2 == 1) strip.colRange(x, x + w).setTo(0);  // odd entries are bars
    x += w;
  }
  cv::Mat gray(height, width, CV_8UC1, cv::Scalar(255));
  cv::Mat bars;
  if (strip.cols <= width) {
    bars = strip;
    bars.copyTo(gray(cv::Rect((width - strip.cols) / 2, 0, strip.cols, bar_h)));
  } else {
    cv::resize(strip, bars, cv::Size(width, bar_h), 0, 0, cv::INTER_AREA);
    bars.copyTo(gray(cv::Rect(0, 0, width, bar_h)));
  }
  if (text_h > 0) {
    int base = 0;
    double scale = 1.0;
    const cv::Size s1 = cv::getTextSize(encoding.digits, cv::FONT_HERSHEY_SIMPLEX, 1.0, 1, &base);
    scale = std::min(0.9 * width / s1.width, 0.8 * text_h / (s1.height + base));
    const cv::Size s = cv::getTextSize(encoding.digits, cv::FONT_HERSHEY_SIMPLEX, scale, 1, &base);
    cv::putText(gray, encoding.digits, cv::Point((width - s.width) / 2, height - base - 1),
                cv::FONT_HERSHEY_SIMPLEX, scale, cv::Scalar(0), 1, cv::LINE_AA);
  }
  cv::Mat out;
  cv::cvtColor(gray, out, cv::COLOR_GRAY2BGRA);
  return out;
}

// ---- image banks ----

ImageBank ImageBank::FromRoot(const fs::path& root) {
  ImageBank bank;
  for (size_t i = 0; i < kTypeNames.size(); ++i) {
    const fs::path dir = root / std::string(kTypeNames[i]);
    if (fs::is_directory(dir)) bank.SetDirectory(static_cast<ElementType>(i), dir);
  }
  return bank;
}

void ImageBank::SetDirectory(ElementType type, const fs::path& dir) {
  static const std::array<std::string_view, 7> kExtensions = {".png", ".jpg", ".jpeg", ".bmp",
                                                              ".webp", ".tif", ".tiff"};
  std::vector<fs::path> files;
  if (fs::is_directory(dir)) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = AsciiLower(entry.path().extension().string());
      if (std::find(kExtensions.begin(), kExtensions.end(), ext) != kExtensions.end()) {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());
  assets_[type] = std::move(files);
}

const std::vector<fs::path>& ImageBank::Assets(ElementType type) const {
  static const std::vector<fs::path> kNone;
  const auto it = assets_.find(type);
  return it == assets_.end() ? kNone : it->second;
}

std::optional<fs::path> PickAsset(const ImageBank& bank, ElementType type, Rng& rng) {
  const auto& files = bank.Assets(type);
  if (files.empty()) return std::nullopt;
  return files[rng.UniformIndex(files.size())];
}

cv::Mat FitAsset(const cv::Mat& bgra, int width, int height) {
  DOCDJINN_CHECK_ARG(width > 0 && height > 0, "asset box must be positive");
  DOCDJINN_CHECK_ARG(bgra.type() == CV_8UC4 && !bgra.empty(), "asset must be BGRA");
  const double scale = std::min(static_cast<double>(width) / bgra.cols,
                                static_cast<double>(height) / bgra.rows);
  const int w = std::clamp(static_cast<int>(std::lround(bgra.cols * scale)), 1, width);
  const int h = std::clamp(static_cast<int>(std::lround(bgra.rows * scale)), 1, height);
  cv::Mat scaled;
  cv::resize(bgra, scaled, cv::Size(w, h), 0, 0, scale < 1 ? cv::INTER_AREA : cv::INTER_LINEAR);
  cv::Mat out = cv::Mat::zeros(height, width, CV_8UC4);
  scaled.copyTo(out(cv::Rect((width - w) / 2, (height - h) / 2, w, h)));
  return out;
}

// ---- compositing ----

void Composite(cv::Mat& page_bgr, std::vector<Overlay> overlays) {
  std::stable_sort(overlays.begin(), overlays.end(),
                   [](const Overlay& a, const Overlay& b) { return a.z_order < b.z_order; });
  for (const auto& o : overlays) BlendOver(page_bgr, o.bgra, o.box.left, o.box.top);
}

int AugmentDlaGt(synthesis::LayoutRegions& gt, const std::vector<PlacedElement>& placed,
                 const std::vector<std::string>& vocabulary, Task task) {
  if (task != Task::kDla) return 0;
  std::optional<std::string> label = synthesis::LookupLabel(vocabulary, "LE-FIGURE");
  if (!label) label = synthesis::LookupLabel(vocabulary, "LE-PICTURE");
  if (!label) return 0;
  int added = 0;
  for (const auto& p : placed) {
    if (p.type != ElementType::kFigure && p.type != ElementType::kPhoto &&
        p.type != ElementType::kLogo) {
      continue;
    }
    const bool covered = std::any_of(gt.regions.begin(), gt.regions.end(), [&](const auto& r) {
      return EqualsIgnoreCase(r.label, *label) && r.box && IoU(*r.box, p.box) >= 0.5;
    });
    if (covered) continue;
    gt.regions.push_back({*label, p.box, p.element_ref});
    ++added;
  }
  return added;
}

VisualElementResult RenderVisualElements(std::vector<synthesis::VisualElementPlaceholder>& placeholders,
                                         const ImageBank& bank, const Box& page, uint64_t seed) {
  VisualElementResult out;
  for (size_t i = 0; i < placeholders.size(); ++i) {
    auto& p = placeholders[i];
    const auto type = MapType(p.raw_type);
    if (!type) {
      ++out.dropped_unknown_type;
      spdlog::debug("dropping placeholder {} of unknown type '{}'", p.element_ref, p.raw_type);
      continue;
    }
    p.canonical_type = std::string(TypeName(*type));
    if (!p.box || p.box->empty()) {
      ++out.dropped_no_box;
      continue;
    }
    const Box box = ClampInto(*p.box, page);
    if (box.empty()) {
      ++out.dropped_no_box;
      continue;
    }
    Rng rng(MixSeed(seed, i));
    Overlay o;
    o.box = box;
    o.z_order = p.z_order;
    switch (*type) {
      case ElementType::kStamp:
        o.bgra = RenderStamp(p.content, box.width(), box.height(), rng);
        break;
      case ElementType::kBarcode: {
        const auto enc = EncodeBarcode(p.content, rng);
        out.barcode_fallbacks += enc.fallback;
        o.bgra = RenderBarcode(enc, box.width(), box.height());
        break;
      }
      default: {
        const auto asset = PickAsset(bank, *type, rng);
        if (!asset) {
          ++out.dropped_empty_bank;
          continue;
        }
        o.bgra = FitAsset(LoadBgra(*asset), box.width(), box.height());
        break;
      }
    }
    out.placed.push_back({*type, box, p.element_ref});
    out.overlays.push_back(std::move(o));
  }
  return out;
}

}  // namespace docdjinn::visual_elements
