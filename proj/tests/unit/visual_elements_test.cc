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

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <gtest/gtest.h>
#include <opencv2/imgproc.hpp>

#include "docdjinn/common/image.h"
#include "docdjinn/visual_elements/elements.h"

namespace docdjinn::visual_elements {
namespace {

namespace fs = std::filesystem;

int InkPixels(const cv::Mat& bgra) {
  std::vector<cv::Mat> ch;
  cv::split(bgra, ch);
  return cv::countNonZero(ch[3] > 0);
}

// ---- map_type ----

TEST(MapTypeTest, Synonyms) {
  EXPECT_EQ(MapType("seal"), ElementType::kStamp);
  EXPECT_EQ(MapType("Infographic"), ElementType::kFigure);
  for (auto t : {"chart", "diagram", "plot", "graph", "illustration"}) {
    EXPECT_EQ(MapType(t), ElementType::kFigure) << t;
  }
  EXPECT_EQ(MapType("IMAGE"), ElementType::kPhoto);
  EXPECT_EQ(MapType("hologram"), std::nullopt);
  EXPECT_EQ(MapType(""), std::nullopt);
}

TEST(MapTypeTest, IdempotentOnAllInputs) {
  for (auto raw : {"stamp", "logo", "figure", "barcode", "photo", "seal", "chart", "image", "plot"}) {
    const auto once = MapType(raw);
    ASSERT_TRUE(once);
    EXPECT_EQ(MapType(TypeName(*once)), once);
  }
}

// ---- stamps ----

TEST(StampTest, SizedRasterContainingText) {
  Rng rng(3);
  const int side = 132;  // 35 mm at 96 dpi
  const StampStyle style = DrawStampStyle(rng);
  const cv::Mat with_text = RenderStamp("APPROVED 2024-03-15", side, side, style);
  const cv::Mat border = RenderStamp("", side, side, style);
  EXPECT_EQ(with_text.rows, side);
  EXPECT_EQ(with_text.cols, side);
  EXPECT_EQ(with_text.type(), CV_8UC4);
  EXPECT_GT(InkPixels(with_text), InkPixels(border) + 200);
  // Text sits in the middle.
  const cv::Mat centre = with_text(cv::Rect(side / 4, side / 4, side / 2, side / 2));
  EXPECT_GT(InkPixels(centre), 100);
}

TEST(StampTest, EmptyContentDrawsBorderOnly) {
  StampStyle s;
  s.color = cv::Scalar(0, 0, 200);
  const cv::Mat m = RenderStamp("", 100, 100, s);
  EXPECT_GT(InkPixels(m), 0);
  // Centre of a circular border stays transparent.
  EXPECT_EQ(m.at<cv::Vec4b>(50, 50)[3], 0);
  EXPECT_EQ(m.at<cv::Vec4b>(0, 0)[3], 0);
}

TEST(StampTest, SeededRenderIsIdentical) {
  Rng a(42), b(42);
  EXPECT_EQ(PixelHash(RenderStamp("PAID", 120, 80, a)), PixelHash(RenderStamp("PAID", 120, 80, b)));
}

TEST(StampTest, StyleRanges) {
  Rng rng(1);
  std::set<int> shapes;
  std::set<double> reds;
  for (int i = 0; i < 300; ++i) {
    const auto s = DrawStampStyle(rng);
    EXPECT_GE(s.angle_deg, -15.0);
    EXPECT_LE(s.angle_deg, 15.0);
    shapes.insert(static_cast<int>(s.shape));
    reds.insert(s.color[2]);
  }
  EXPECT_EQ(shapes.size(), 2u);
  EXPECT_EQ(reds.size(), 3u);
}

// ---- barcodes ----

TEST(BarcodeTest, KnownSymbolSequence) {
  // Start C, 12, 34, 56, checksum (105 + 1*12 + 2*34 + 3*56) mod 103, stop.
  const int checksum = (105 + 1 * 12 + 2 * 34 + 3 * 56) % 103;
  EXPECT_EQ(EncodeCode128C("123456"), (std::vector<int>{105, 12, 34, 56, checksum, 106}));
}

TEST(BarcodeTest, ReferencePatterns) {
  // From the published Code 128 symbol table.
  const std::map<int, std::string> ref = {{0, "212222"},  {12, "112232"}, {34, "131123"},
                                          {44, "132131"}, {56, "331121"}, {100, "114131"},
                                          {103, "211412"}, {104, "211214"}, {105, "211232"},
                                          {106, "2331112"}};
  for (const auto& [v, pat] : ref) {
    const auto& p = Code128Pattern(v);
    std::string got;
    for (int w : p) {
      if (w) got += static_cast<char>('0' + w);
    }
    EXPECT_EQ(got, pat) << v;
  }
}

TEST(BarcodeTest, TableInvariants) {
  std::set<std::array<int, 7>> seen;
  for (int v = 0; v <= 106; ++v) {
    const auto& p = Code128Pattern(v);
    const int sum = std::accumulate(p.begin(), p.end(), 0);
    EXPECT_EQ(sum, v == 106 ? 13 : 11) << v;
    EXPECT_EQ((p[0] + p[2] + p[4] + p[6]) % 2, 0) << v;  // even bar modules
    for (int i = 0; i < (v == 106 ? 7 : 6); ++i) EXPECT_GE(p[i], 1);
    seen.insert(p);
  }
  EXPECT_EQ(seen.size(), 107u);
}

TEST(BarcodeTest, OddLengthEndsInSetB) {
  const auto v = EncodeCode128C("12345");
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v[3], 100);
  EXPECT_EQ(v[4], 16 + 5);
  const int checksum = (105 + 12 + 2 * 34 + 3 * 100 + 4 * 21) % 103;
  EXPECT_EQ(v[5], checksum);
}

TEST(BarcodeTest, ModulesHaveQuietZonesAndPositiveBars) {
  Rng rng(0);
  const auto enc = EncodeBarcode("123456", rng);
  EXPECT_FALSE(enc.fallback);
  const auto m = BarcodeModules(enc);
  EXPECT_EQ(m.front(), kQuietZoneModules);
  EXPECT_EQ(m.back(), kQuietZoneModules);
  EXPECT_EQ(m.size() % 2, 1u);  // space, bar, ..., bar, space
  for (int w : m) EXPECT_GT(w, 0);
  EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0), 20 + 11 * 5 + 13);
}

TEST(BarcodeTest, SameDigitsSamePattern) {
  Rng a(1), b(999);
  const auto e1 = EncodeBarcode("123456", a);
  const auto e2 = EncodeBarcode(" 123456 ", b);
  EXPECT_EQ(e1.values, e2.values);
  EXPECT_EQ(PixelHash(RenderBarcode(e1, 300, 60)), PixelHash(RenderBarcode(e2, 300, 60)));
}

TEST(BarcodeTest, NonNumericFallsBackToTwelveDigits) {
  for (const char* content : {"ACME-42", ""}) {
    Rng rng(5);
    const auto e = EncodeBarcode(content, rng);
    EXPECT_TRUE(e.fallback) << content;
    EXPECT_EQ(e.digits.size(), 12u);
    Rng again(5);
    EXPECT_EQ(EncodeBarcode(content, again).digits, e.digits);
  }
}

TEST(BarcodeTest, RasterReadsBackAsModules) {
  Rng rng(0);
  const auto enc = EncodeBarcode("0042", rng);
  const auto m = BarcodeModules(enc);
  const int total = std::accumulate(m.begin(), m.end(), 0);
  const cv::Mat img = RenderBarcode(enc, total * 2, 30);
  EXPECT_EQ(img.cols, total * 2);
  // Run lengths of the top row, halved, give back the module widths.
  std::vector<int> runs;
  uint8_t prev = img.at<cv::Vec4b>(0, 0)[0];
  int len = 0;
  for (int x = 0; x < img.cols; ++x) {
    const uint8_t v = img.at<cv::Vec4b>(0, x)[0];
    if (v != prev) {
      runs.push_back(len / 2);
      len = 0;
      prev = v;
    }
    ++len;
  }
  runs.push_back(len / 2);
  EXPECT_EQ(runs, m);
}

// ---- banks ----

class BankTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() / "docdjinn_bank_test";
    fs::remove_all(root_);
    fs::create_directories(root_ / "figure");
    fs::create_directories(root_ / "logo");
    fs::create_directories(root_ / "photo");
    for (int i = 0; i < 5; ++i) {
      WritePng(root_ / "figure" / ("f" + std::to_string(i) + ".png"),
               cv::Mat(20 + i, 40, CV_8UC3, cv::Scalar(10 * i, 0, 0)));
    }
    WritePng(root_ / "photo" / "face.png", cv::Mat(30, 20, CV_8UC3, cv::Scalar(0, 90, 0)));
    std::ofstream(root_ / "figure" / "notes.txt") << "ignored";
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST_F(BankTest, ReproduciblePickFromFiveAssets) {
  const auto bank = ImageBank::FromRoot(root_);
  EXPECT_EQ(bank.Assets(ElementType::kFigure).size(), 5u);
  Rng a(7), b(7);
  EXPECT_EQ(PickAsset(bank, ElementType::kFigure, a), PickAsset(bank, ElementType::kFigure, b));
  std::set<fs::path> seen;
  Rng rng(1);
  for (int i = 0; i < 200; ++i) seen.insert(*PickAsset(bank, ElementType::kFigure, rng));
  EXPECT_EQ(seen.size(), 5u);
}

TEST_F(BankTest, EmptyBankYieldsNothing) {
  const auto bank = ImageBank::FromRoot(root_);
  Rng rng(1);
  EXPECT_FALSE(PickAsset(bank, ElementType::kLogo, rng));
  EXPECT_TRUE(PickAsset(bank, ElementType::kPhoto, rng));
}

TEST_F(BankTest, RenderVisualElementsCountsDrops) {
  const auto bank = ImageBank::FromRoot(root_);
  std::vector<synthesis::VisualElementPlaceholder> ps(5);
  const char* types[] = {"chart", "logo", "hologram", "seal", "barcode"};
  for (int i = 0; i < 5; ++i) {
    ps[i].element_ref = "e" + std::to_string(i);
    ps[i].raw_type = types[i];
    ps[i].content = i == 4 ? "ACME" : "OK";
    ps[i].box = Box{10 * i, 10, 10 * i + 60, 50};
    ps[i].z_order = i == 3 ? 10 : 0;
  }
  const auto res = RenderVisualElements(ps, bank, {0, 0, 200, 100}, 3);
  EXPECT_EQ(res.dropped_unknown_type, 1);
  EXPECT_EQ(res.dropped_empty_bank, 1);
  EXPECT_EQ(res.barcode_fallbacks, 1);
  ASSERT_EQ(res.overlays.size(), 3u);
  EXPECT_EQ(ps[0].canonical_type, "figure");
  EXPECT_EQ(ps[3].canonical_type, "stamp");
  EXPECT_TRUE(ps[2].canonical_type.empty());
  for (const auto& o : res.overlays) {
    EXPECT_EQ(o.bgra.cols, o.box.width());
    EXPECT_EQ(o.bgra.rows, o.box.height());
  }
}

TEST(FitAssetTest, KeepsAspectAndCentres) {
  const cv::Mat src(10, 40, CV_8UC4, cv::Scalar(1, 2, 3, 255));
  const cv::Mat out = FitAsset(src, 80, 80);
  EXPECT_EQ(out.size(), cv::Size(80, 80));
  EXPECT_EQ(out.at<cv::Vec4b>(40, 40)[3], 255);
  EXPECT_EQ(out.at<cv::Vec4b>(5, 40)[3], 0);
}

// ---- composite ----

Overlay Solid(Box b, cv::Scalar bgra, int z) {
  return {cv::Mat(b.height(), b.width(), CV_8UC4, bgra), b, z};
}

TEST(CompositeTest, HigherZWins) {
  cv::Mat page(50, 50, CV_8UC3, cv::Scalar(255, 255, 255));
  Composite(page, {Solid({0, 0, 20, 20}, {0, 0, 255, 255}, 10), Solid({0, 0, 20, 20}, {0, 0, 0, 255}, 0)});
  EXPECT_EQ(page.at<cv::Vec3b>(5, 5), cv::Vec3b(0, 0, 255));
  EXPECT_EQ(page.size(), cv::Size(50, 50));
}

TEST(CompositeTest, NoOverlaysIsIdentity) {
  cv::Mat page(30, 30, CV_8UC3, cv::Scalar(9, 8, 7));
  const auto before = PixelHash(page);
  Composite(page, {});
  EXPECT_EQ(PixelHash(page), before);
}

TEST(CompositeTest, DisjointOverlaysCommute) {
  const auto a = Solid({0, 0, 10, 10}, {255, 0, 0, 128}, 0);
  const auto b = Solid({20, 20, 30, 30}, {0, 255, 0, 200}, 0);
  cv::Mat p1(40, 40, CV_8UC3, cv::Scalar(255, 255, 255));
  cv::Mat p2 = p1.clone();
  Composite(p1, {a, b});
  Composite(p2, {b, a});
  EXPECT_EQ(PixelHash(p1), PixelHash(p2));
}

// ---- DLA augmentation ----

TEST(AugmentDlaTest, AddsMissingFigureRegion) {
  synthesis::LayoutRegions gt;
  gt.regions.push_back({"LE-TEXT", Box{0, 0, 100, 20}, "e1"});
  const std::vector<std::string> vocab = {"LE-TEXT", "LE-FIGURE", "LE-TABLE"};
  EXPECT_EQ(AugmentDlaGt(gt, {{ElementType::kFigure, {10, 30, 110, 130}, "e9"}}, vocab, Task::kDla), 1);
  ASSERT_EQ(gt.regions.size(), 2u);
  EXPECT_EQ(gt.regions[1].label, "LE-FIGURE");
  EXPECT_EQ(*gt.regions[1].box, (Box{10, 30, 110, 130}));
}

TEST(AugmentDlaTest, CoveredFigureUnchanged) {
  synthesis::LayoutRegions gt;
  gt.regions.push_back({"LE-FIGURE", Box{10, 30, 110, 130}, "e1"});
  const std::vector<std::string> vocab = {"LE-FIGURE"};
  EXPECT_EQ(AugmentDlaGt(gt, {{ElementType::kFigure, {15, 35, 110, 130}, "e9"}}, vocab, Task::kDla), 0);
  EXPECT_EQ(gt.regions.size(), 1u);
}

TEST(AugmentDlaTest, PictureVocabularyAndTaskGate) {
  synthesis::LayoutRegions gt;
  const std::vector<std::string> vocab = {"LE-TEXT", "LE-PICTURE"};
  const std::vector<PlacedElement> placed = {{ElementType::kPhoto, {0, 0, 50, 50}, "a"},
                                             {ElementType::kStamp, {0, 60, 50, 110}, "b"}};
  EXPECT_EQ(AugmentDlaGt(gt, placed, vocab, Task::kCls), 0);
  EXPECT_EQ(AugmentDlaGt(gt, placed, vocab, Task::kDla), 1);
  EXPECT_EQ(gt.regions[0].label, "LE-PICTURE");
}

}  // namespace
}  // namespace docdjinn::visual_elements
