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

#include <gtest/gtest.h>

#include "docdjinn/common/image.h"
#include "docdjinn/rendering/command_renderer.h"
#include "docdjinn/rendering/ocr.h"
#include "docdjinn/rendering/test_renderer.h"
#include "docdjinn/synthesis/document.h"
#include "docdjinn/synthesis/html.h"
#include "docdjinn/synthesis/regions.h"
#include "docdjinn/synthesis/stub_backend.h"

namespace docdjinn::rendering {
namespace {

namespace fs = std::filesystem;
using synthesis::DocStatus;
using synthesis::SynthesizedDocument;

std::string WithRefs(const std::string& source) {
  auto doc = html::Document::Parse(source);
  doc.AssignRefs();
  return doc.Serialize();
}

std::string RefOfFirst(const std::string& source, std::string_view tag) {
  auto doc = html::Document::Parse(source);
  return html::RefOf(*doc.FindFirst(tag));
}

RenderResult RenderFitted(TestRenderer& r, const std::string& source) {
  return r.Render(source, r.Measure(source));
}

TEST(TestRendererTest, FixedBodyMeasuresDeclaredSize) {
  TestRenderer r;
  const auto src = WithRefs("<html><body style=\"width:800px;height:1000px\"><p>hi</p></body></html>");
  EXPECT_EQ(r.Measure(src), (PageSize{800, 1000}));
}

TEST(TestRendererTest, OverflowingContentMeasuresAtLeastDeclared) {
  TestRenderer r;
  std::string paras;
  for (int i = 0; i < 80; ++i) paras += "<p>line of text number " + std::to_string(i) + "</p>";
  const auto src = WithRefs("<body style=\"width:400px;height:300px\">" + paras + "</body>");
  const PageSize s = r.Measure(src);
  EXPECT_GE(s.width, 400);
  EXPECT_GT(s.height, 300);
}

TEST(TestRendererTest, EmptyDocumentIsRenderError) {
  TestRenderer r;
  EXPECT_THROW(r.Measure(""), RenderError);
  EXPECT_THROW(r.Measure("just text"), RenderError);
}

TEST(TestRendererTest, WordBoxesFollowFixedAdvance) {
  TestRenderer r;
  const auto src = WithRefs("<body><p>ab cde</p></body>");
  const auto res = r.Render(src, {794, 200});
  ASSERT_EQ(res.word_boxes.size(), 2u);
  // 16 px font: 8 px per code point, 20 px line.
  EXPECT_EQ(res.word_boxes[0].box, (Box{0, 0, 16, 20}));
  EXPECT_EQ(res.word_boxes[1].box, (Box{24, 0, 48, 20}));
  EXPECT_EQ(res.word_boxes[0].text, "ab");
  EXPECT_EQ(res.word_boxes[0].element_ref, RefOfFirst(src, "p"));
}

TEST(TestRendererTest, LinesWrapAtContainerWidth) {
  TestRenderer r;
  const auto src = WithRefs("<body><div style=\"width:40px\">aaaa bbbb cccc</div></body>");
  const auto res = r.Render(src, {100, 100});
  ASSERT_EQ(res.word_boxes.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(res.word_boxes[i].box.left, 0);
    EXPECT_EQ(res.word_boxes[i].box.top, static_cast<int>(20 * i));
  }
}

TEST(TestRendererTest, OneLayoutElementGivesOneBox) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body><h1>Report</h1><div class=\"LE-TABLE\"><table><tr><td>a</td><td>b</td></tr>"
      "</table></div><p>end</p></body>");
  const auto res = RenderFitted(r, src);
  auto doc = html::Document::Parse(src);
  int le_table = 0;
  for (const html::Node* el : doc.Elements()) {
    if (html::HasClass(*el, "LE-TABLE")) {
      ++le_table;
      const auto it = res.element_boxes.find(html::RefOf(*el));
      ASSERT_NE(it, res.element_boxes.end());
      EXPECT_GT(it->second.area(), 0);
    }
  }
  EXPECT_EQ(le_table, 1);
}

TEST(TestRendererTest, TableCellsSplitRowEqually) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body style=\"width:300px\"><table><tr><td>a</td><td>b</td><td>c</td></tr></table></body>");
  const auto res = r.Render(src, {300, 100});
  ASSERT_EQ(res.word_boxes.size(), 3u);
  EXPECT_EQ(res.word_boxes[0].box.left, 0);
  EXPECT_EQ(res.word_boxes[1].box.left, 100);
  EXPECT_EQ(res.word_boxes[2].box.left, 200);
}

TEST(TestRendererTest, HandwrittenSpanHasRegionAndWordBoxes) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body><p>Signed: <span class=\"handwritten author1\" style=\"font-size:24px\">Ada "
      "Lovelace</span></p></body>");
  const auto res = RenderFitted(r, src);
  const std::string ref = RefOfFirst(src, "span");
  ASSERT_TRUE(res.element_boxes.count(ref));
  const Box region = res.element_boxes.at(ref);
  int words = 0;
  for (const auto& w : res.word_boxes) {
    if (w.element_ref != ref) continue;
    ++words;
    EXPECT_EQ(w.box.bottom - w.box.top, 30);  // 1.25 x 24 px
    EXPECT_EQ(Intersect(w.box, region), w.box);
  }
  EXPECT_EQ(words, 2);
  // "Lovelace" at 12 px per code point.
  EXPECT_EQ(region.right - region.left, 3 * 12 + 12 + 8 * 12);
}

TEST(TestRendererTest, PageBreakGivesTwoPages) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body><p>one</p><div style=\"page-break-before:always\"><p>two</p></div></body>");
  EXPECT_EQ(RenderFitted(r, src).page_count, 2);
}

TEST(TestRendererTest, TallContentOnShortPageGivesTwoPages) {
  TestRenderer r;
  const auto src = WithRefs("<body><div style=\"height:150px\"></div></body>");
  EXPECT_EQ(r.Render(src, {200, 100}).page_count, 2);
  EXPECT_EQ(r.Render(src, {200, 150}).page_count, 1);
}

TEST(TestRendererTest, HiddenElementsAreOmitted) {
  TestRenderer r;
  const auto src = WithRefs(
      "<html><head><title>T</title></head><body><p>shown</p><p style=\"display:none\">gone</p>"
      "<script>var x = 1;</script><div></div></body></html>");
  const auto res = RenderFitted(r, src);
  ASSERT_EQ(res.word_boxes.size(), 1u);
  EXPECT_EQ(res.word_boxes[0].text, "shown");
  EXPECT_FALSE(res.element_boxes.count(RefOfFirst(src, "title")));
  // Zero-area div.
  EXPECT_FALSE(res.element_boxes.count(RefOfFirst(src, "div")));
}

TEST(TestRendererTest, AbsoluteRightAnchorsToPageEdge) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body><div style=\"position:absolute;top:10px;right:20px;width:50px;height:40px\"></div>"
      "</body>");
  const auto res = r.Render(src, {300, 200});
  EXPECT_EQ(res.element_boxes.at(RefOfFirst(src, "div")), (Box{230, 10, 280, 50}));
}

TEST(TestRendererTest, NegativeOffsetsStayVisibleInBoxes) {
  TestRenderer r;
  const auto src = WithRefs(
      "<body><div style=\"position:absolute;left:-60px;top:0;width:100px;height:20px\">x</div>"
      "</body>");
  const auto res = r.Render(src, {300, 200});
  EXPECT_LT(res.element_boxes.at(RefOfFirst(src, "div")).left, 0);
}

TEST(TestRendererTest, MillimetreLengthsUse96Dpi) {
  TestRenderer r;
  const auto src = WithRefs("<body><div style=\"width:10mm;height:10mm\"></div></body>");
  const auto res = r.Render(src, {200, 200});
  const Box b = res.element_boxes.at(RefOfFirst(src, "div"));
  EXPECT_EQ(b.right - b.left, 38);  // 37.795 rounded outwards
}

TEST(TestRendererTest, BoxesAreOrderedAndIntegral) {
  TestRenderer r;
  synthesis::StubBackend stub("vqa");
  const auto src = WithRefs(stub.Document(3));
  const auto res = RenderFitted(r, src);
  for (const auto& [ref, b] : res.element_boxes) {
    EXPECT_LE(b.left, b.right) << ref;
    EXPECT_LE(b.top, b.bottom) << ref;
  }
  for (const auto& w : res.word_boxes) {
    EXPECT_LT(w.box.left, w.box.right);
    EXPECT_LT(w.box.top, w.box.bottom);
  }
}

TEST(TestRendererTest, RerenderIsIdentical) {
  TestRenderer r;
  synthesis::StubBackend stub("kie");
  const auto src = WithRefs(stub.Document(7));
  const auto a = RenderFitted(r, src);
  const auto b = RenderFitted(r, src);
  EXPECT_EQ(a.element_boxes, b.element_boxes);
  EXPECT_EQ(RenderLayoutToJson(a), RenderLayoutToJson(b));
  EXPECT_EQ(PixelHash(a.page_image), PixelHash(b.page_image));
}

TEST(TestRendererTest, StubDocumentsAreSinglePageExceptPlantedBreaks) {
  TestRenderer r;
  for (const auto& fixture : synthesis::StubBackend::Fixtures()) {
    synthesis::StubBackend stub(fixture);
    for (long long g = 0; g < 20; ++g) {
      const auto res = RenderFitted(r, WithRefs(stub.Document(g)));
      EXPECT_EQ(res.page_count, g % 20 == 4 ? 2 : 1) << fixture << " " << g;
    }
  }
}

TEST(TestRendererTest, StubHandwritingAndPlaceholdersAllGetBoxes) {
  TestRenderer r;
  synthesis::StubBackend stub("vqa");
  auto doc = html::Document::Parse(stub.Document(0));
  doc.AssignRefs();
  const auto res = RenderFitted(r, doc.Serialize());
  for (const auto& hw : synthesis::ExtractHandwritingRegions(doc, nullptr)) {
    EXPECT_TRUE(res.element_boxes.count(hw.element_ref)) << hw.text;
  }
  for (const auto& p : synthesis::ExtractPlaceholders(doc)) {
    EXPECT_TRUE(res.element_boxes.count(p.element_ref)) << p.raw_type;
  }
}

TEST(RenderLayoutTest, JsonRoundTrip) {
  TestRenderer r;
  synthesis::StubBackend stub("dla");
  const auto res = RenderFitted(r, WithRefs(stub.Document(2)));
  const auto back = RenderLayoutFromJson(RenderLayoutToJson(res));
  EXPECT_EQ(back.page_count, res.page_count);
  EXPECT_EQ(back.page_size, res.page_size);
  EXPECT_EQ(back.element_boxes, res.element_boxes);
  ASSERT_EQ(back.word_boxes.size(), res.word_boxes.size());
  EXPECT_EQ(back.word_boxes.back().text, res.word_boxes.back().text);
}

// ---- document status ----

TEST(DocumentTest, StatusMovesForwardOnly) {
  SynthesizedDocument d("d0", "<p>x</p>");
  EXPECT_EQ(d.status(), DocStatus::kRaw);
  EXPECT_THROW(d.MarkVerified(), InvalidArgument);
  EXPECT_THROW(d.MarkEnhanced(cv::Mat(), false), InvalidArgument);
  d.MarkRendered(RenderResult{});
  EXPECT_THROW(d.MarkRendered(RenderResult{}), InvalidArgument);
  EXPECT_THROW(d.set_html("<p>y</p>"), InvalidArgument);
  d.MarkEnhanced(cv::Mat(2, 2, CV_8UC3), true);
  d.MarkVerified();
  EXPECT_TRUE(d.terminal());
  EXPECT_THROW(d.Reject(RejectReason::kBadGt), InvalidArgument);
}

TEST(DocumentTest, RejectCarriesReason) {
  SynthesizedDocument d("d1", "");
  d.Reject(RejectReason::kRenderFail, "boom");
  EXPECT_EQ(d.status(), DocStatus::kRejected);
  EXPECT_EQ(d.reject_reason(), RejectReason::kRenderFail);
  EXPECT_EQ(d.reject_detail(), "boom");
  EXPECT_THROW(d.MarkRendered(RenderResult{}), InvalidArgument);
}

TEST(DocumentTest, StatusNamesRoundTrip) {
  for (auto s : {DocStatus::kRaw, DocStatus::kRendered, DocStatus::kEnhanced, DocStatus::kVerified,
                 DocStatus::kRejected}) {
    EXPECT_EQ(synthesis::ParseStatus(synthesis::StatusName(s)), s);
  }
  EXPECT_THROW(synthesis::ParseStatus("done"), InvalidArgument);
}

// ---- text boxes ----

SynthesizedDocument RenderedDoc(const std::string& id, const std::string& body) {
  TestRenderer r;
  SynthesizedDocument d(id, WithRefs(body));
  d.MarkRendered(RenderFitted(r, d.html()));
  return d;
}

TEST(TextBoxesTest, TypesetOnlyUsesTextLayer) {
  auto d = RenderedDoc("t0", "<body><p>one two three</p><p>four</p></body>");
  const auto boxes = ExtractTextBoxes(d, nullptr);
  ASSERT_TRUE(boxes.ok());
  EXPECT_EQ(boxes.route, TextRoute::kTextLayer);
  EXPECT_EQ(boxes.words.size(), 4u);
  EXPECT_EQ(boxes.words[3].box, d.render()->word_boxes[3].box);
}

TEST(TextBoxesTest, OverlaidDocumentRoutesToOcr) {
  auto d = RenderedDoc("t1", "<body><p>one two</p></body>");
  d.MarkEnhanced(d.render()->page_image.clone(), true);
  TextLayerOcr ocr;
  const auto boxes = ExtractTextBoxes(d, &ocr);
  ASSERT_TRUE(boxes.ok());
  EXPECT_EQ(boxes.route, TextRoute::kOcr);
  EXPECT_EQ(boxes.words.size(), 2u);
}

TEST(TextBoxesTest, SidecarWordsAreReturnedVerbatim) {
  const fs::path dir = fs::temp_directory_path() / "docdjinn_sidecar_test";
  fs::create_directories(dir);
  const std::vector<OcrWord> planted = {{"Total", {10, 20, 60, 40}, 0.9},
                                        {"42.00", {70, 20, 120, 40}, 0.8}};
  {
    std::ofstream out(dir / "t2.json");
    out << nlohmann::json{{"words", planted}}.dump();
  }
  auto d = RenderedDoc("t2", "<body><p>anything</p></body>");
  d.MarkEnhanced(d.render()->page_image.clone(), true);
  SidecarOcr ocr(dir);
  const auto boxes = ExtractTextBoxes(d, &ocr);
  ASSERT_TRUE(boxes.ok());
  ASSERT_EQ(boxes.words.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(boxes.words[i].text, planted[i].text);
    EXPECT_EQ(boxes.words[i].box, planted[i].box);
    EXPECT_DOUBLE_EQ(boxes.words[i].confidence, planted[i].confidence);
  }
  fs::remove_all(dir);
}

TEST(TextBoxesTest, OcrFailureRejects) {
  auto d = RenderedDoc("missing-page", "<body><p>x</p></body>");
  d.MarkEnhanced(d.render()->page_image.clone(), true);
  SidecarOcr ocr(fs::temp_directory_path() / "docdjinn_no_such_dir");
  auto boxes = ExtractTextBoxes(d, &ocr);
  EXPECT_EQ(boxes.reject, RejectReason::kOcrFail);
  boxes = ExtractTextBoxes(d, nullptr);
  EXPECT_EQ(boxes.reject, RejectReason::kOcrFail);
}

// ---- command backend ----

class CommandRendererTest : public ::testing::Test {
 protected:
  void SetUp() override {
    script_ = fs::temp_directory_path() / "docdjinn_fake_renderer.sh";
    png_ = fs::temp_directory_path() / "docdjinn_fake_page.png";
    WritePng(png_, cv::Mat(80, 120, CV_8UC3, cv::Scalar(255, 255, 255)));
    std::ofstream out(script_);
    // Emits a fixed layout and copies a prepared raster.
    out << "#!/bin/sh\n"
           "op=$1; out=$3\n"
           "if [ \"$op\" = measure ]; then echo '{\"width\":120,\"height\":80}' > \"$out/layout.json\"; exit 0; fi\n"
           "if [ \"$op\" = render ]; then\n"
           "  echo \"{\\\"page_count\\\":1,\\\"width\\\":$4,\\\"height\\\":$5,"
           "\\\"element_boxes\\\":{\\\"e1\\\":[1,2,30,40]},"
           "\\\"word_boxes\\\":[{\\\"text\\\":\\\"hi\\\",\\\"box\\\":[1,2,10,12],\\\"element_ref\\\":\\\"e1\\\"}]}\" > \"$out/layout.json\"\n"
           "  cp '" + png_.string() + "' \"$out/page.png\"\n"
           "  exit 0\nfi\nexit 3\n";
    out.close();
    fs::permissions(script_, fs::perms::owner_all);
  }
  void TearDown() override {
    fs::remove(script_);
    fs::remove(png_);
  }
  fs::path script_;
  fs::path png_;
};

TEST_F(CommandRendererTest, ReadsLayoutAndRaster) {
  CommandRenderBackend r(script_.string());
  EXPECT_EQ(r.Measure("<p>hi</p>"), (PageSize{120, 80}));
  const auto res = r.Render("<p>hi</p>", {120, 80});
  EXPECT_EQ(res.page_size, (PageSize{120, 80}));
  EXPECT_EQ(res.element_boxes.at("e1"), (Box{1, 2, 30, 40}));
  ASSERT_EQ(res.word_boxes.size(), 1u);
  EXPECT_EQ(res.page_image.cols, 120);
}

TEST(CommandRendererFailureTest, NonZeroExitIsRenderError) {
  CommandRenderBackend r("false");
  EXPECT_THROW(r.Measure("<p>x</p>"), RenderError);
  EXPECT_THROW(r.Render("<p>x</p>", {10, 10}), RenderError);
}

}  // namespace
}  // namespace docdjinn::rendering
