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

#ifndef DOCDJINN_VISUAL_ELEMENTS_ELEMENTS_H_
#define DOCDJINN_VISUAL_ELEMENTS_ELEMENTS_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>

#include "docdjinn/common/geometry.h"
#include "docdjinn/common/image.h"
#include "docdjinn/common/rng.h"
#include "docdjinn/common/task.h"
#include "docdjinn/synthesis/ground_truth.h"
#include "docdjinn/synthesis/regions.h"

namespace docdjinn::visual_elements {

enum class ElementType { kStamp, kLogo, kFigure, kBarcode, kPhoto };

std::string_view TypeName(ElementType type);

// Case-insensitive; chart/diagram/plot/graph/illustration/infographic are
// figures, image is a photo, seal is a stamp. nullopt when unknown.
std::optional<ElementType> MapType(std::string_view raw);

// ---- stamps ----

enum class StampShape { kCircle, kRoundedRect };

struct StampStyle {
  StampShape shape = StampShape::kCircle;
  cv::Scalar color;  // BGR
  double angle_deg = 0.0;
};

// Shape from a fair coin, colour uniform over red/blue/violet, rotation
// U(-15, 15) degrees.
StampStyle DrawStampStyle(Rng& rng);

// Transparent BGRA raster of exactly width x height.
cv::Mat RenderStamp(std::string_view content, int width, int height, Rng& rng);
cv::Mat RenderStamp(std::string_view content, int width, int height, const StampStyle& style);

// ---- barcodes (Code 128, numeric set C) ----

inline constexpr int kQuietZoneModules = 10;

// Bar/space module widths of symbol `value` (0..106). Symbols have six
// elements of 11 modules in total; the stop symbol (106) has seven.
const std::array<int, 7>& Code128Pattern(int value);

struct BarcodeEncoding {
  std::string digits;
  bool fallback = false;    // content was not numeric
  std::vector<int> values;  // start, data, checksum, stop
};

// Digit pairs in set C; an odd trailing digit switches to set B.
std::vector<int> EncodeCode128C(std::string_view digits);

// Non-numeric or empty content is replaced by 12 digits drawn from `rng`.
BarcodeEncoding EncodeBarcode(std::string_view content, Rng& rng);

// Alternating bar/space widths including quiet zones, starting with the
// leading quiet zone (a space).
std::vector<int> BarcodeModules(const BarcodeEncoding& encoding);

// Opaque BGRA raster; bars scaled to the width, digits printed underneath
// when there is room.
cv::Mat RenderBarcode(const BarcodeEncoding& encoding, int width, int height);

// ---- image banks ----

// Directories of raster assets per element type.
class ImageBank {
 public:
  ImageBank() = default;
  // Uses <root>/<type name> for each type that exists.
  static ImageBank FromRoot(const std::filesystem::path& root);

  void SetDirectory(ElementType type, const std::filesystem::path& dir);
  // Sorted asset paths; empty when the type has no bank.
  const std::vector<std::filesystem::path>& Assets(ElementType type) const;

 private:
  std::map<ElementType, std::vector<std::filesystem::path>> assets_;
};

// Uniform choice among the bank's files; nullopt for an empty bank.
std::optional<std::filesystem::path> PickAsset(const ImageBank& bank, ElementType type, Rng& rng);

// Scales `bgra` to fit width x height with its aspect kept, centred on a
// transparent canvas.
cv::Mat FitAsset(const cv::Mat& bgra, int width, int height);

// ---- compositing ----

// Blends overlays in ascending z_order (stable for ties). The page size
// never changes.
void Composite(cv::Mat& page_bgr, std::vector<Overlay> overlays);

struct PlacedElement {
  ElementType type;
  Box box;
  std::string element_ref;
};

// Adds a figure/picture region for every placed figure, photo or logo not
// already covered (IoU >= 0.5) by a region with that label. The label is
// LE-FIGURE when the vocabulary has it, else LE-PICTURE. Returns the number
// of regions added; 0 for non-DLA tasks.
int AugmentDlaGt(synthesis::LayoutRegions& gt, const std::vector<PlacedElement>& placed,
                 const std::vector<std::string>& vocabulary, Task task);

struct VisualElementResult {
  std::vector<Overlay> overlays;
  std::vector<PlacedElement> placed;
  int dropped_unknown_type = 0;
  int dropped_empty_bank = 0;
  int dropped_no_box = 0;
  int barcode_fallbacks = 0;
};

// Maps types, renders stamps and barcodes, samples bank assets and returns
// the overlays to composite. Placeholders are updated with canonical types.
VisualElementResult RenderVisualElements(std::vector<synthesis::VisualElementPlaceholder>& placeholders,
                                         const ImageBank& bank, const Box& page, uint64_t seed);

}  // namespace docdjinn::visual_elements

#endif  // DOCDJINN_VISUAL_ELEMENTS_ELEMENTS_H_
