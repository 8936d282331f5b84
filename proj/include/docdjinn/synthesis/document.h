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

#ifndef DOCDJINN_SYNTHESIS_DOCUMENT_H_
#define DOCDJINN_SYNTHESIS_DOCUMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>

#include "docdjinn/common/task.h"
#include "docdjinn/rendering/render.h"
#include "docdjinn/synthesis/ground_truth.h"
#include "docdjinn/synthesis/regions.h"

namespace docdjinn::synthesis {

enum class DocStatus { kRaw, kRendered, kEnhanced, kVerified, kRejected };

std::string_view StatusName(DocStatus status);
DocStatus ParseStatus(std::string_view name);

// One generated HTML document as it moves through the pipeline.
class SynthesizedDocument {
 public:
  SynthesizedDocument(std::string id, std::string html) : id_(std::move(id)), html_(std::move(html)) {}

  const std::string& id() const { return id_; }
  const std::string& html() const { return html_; }
  // Rewrites the markup, e.g. after element refs were stamped. Only while raw.
  void set_html(std::string html);

  std::optional<GroundTruth> gt;
  std::vector<HandwritingRegion> handwriting_regions;
  std::vector<VisualElementPlaceholder> placeholders;

  DocStatus status() const { return status_; }
  std::optional<RejectReason> reject_reason() const { return reason_; }
  const std::string& reject_detail() const { return detail_; }
  bool terminal() const { return status_ == DocStatus::kVerified || status_ == DocStatus::kRejected; }

  const std::optional<rendering::RenderResult>& render() const { return render_; }
  // Page raster after overlays; equals the render raster until enhanced.
  const cv::Mat& page_image() const;
  // True once handwriting or visual element overlays were composited.
  bool has_overlays() const { return has_overlays_; }

  // raw -> rendered. Throws InvalidArgument on any other transition.
  void MarkRendered(rendering::RenderResult result);
  // rendered -> enhanced. `overlays` tells whether anything was drawn.
  void MarkEnhanced(cv::Mat page_image, bool overlays);
  // rendered|enhanced -> verified.
  void MarkVerified();
  // Any non-terminal state -> rejected.
  void Reject(RejectReason reason, std::string detail = {});

 private:
  void Require(bool ok, std::string_view to) const;

  std::string id_;
  std::string html_;
  DocStatus status_ = DocStatus::kRaw;
  std::optional<RejectReason> reason_;
  std::string detail_;
  std::optional<rendering::RenderResult> render_;
  cv::Mat enhanced_;
  bool has_overlays_ = false;
};

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_DOCUMENT_H_
