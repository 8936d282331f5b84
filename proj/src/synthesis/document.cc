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

#include "docdjinn/synthesis/document.h"

#include <array>

#include "docdjinn/common/error.h"
#include "docdjinn/common/text.h"

namespace docdjinn::synthesis {

namespace {
constexpr std::array<std::string_view, 5> kStatusNames = {"raw", "rendered", "enhanced",
                                                          "verified", "rejected"};
}  // namespace

std::string_view StatusName(DocStatus status) {
  return kStatusNames[static_cast<size_t>(status)];
}

DocStatus ParseStatus(std::string_view name) {
  for (size_t i = 0; i < kStatusNames.size(); ++i) {
    if (EqualsIgnoreCase(name, kStatusNames[i])) return static_cast<DocStatus>(i);
  }
  throw InvalidArgument("unknown document status: " + std::string(name));
}

void SynthesizedDocument::set_html(std::string html) {
  Require(status_ == DocStatus::kRaw, "edit");
  html_ = std::move(html);
}

const cv::Mat& SynthesizedDocument::page_image() const {
  static const cv::Mat kEmpty;
  if (!enhanced_.empty()) return enhanced_;
  return render_ ? render_->page_image : kEmpty;
}

void SynthesizedDocument::Require(bool ok, std::string_view to) const {
  if (!ok) {
    throw InvalidArgument("document " + id_ + ": cannot go from " +
                          std::string(StatusName(status_)) + " to " + std::string(to));
  }
}

void SynthesizedDocument::MarkRendered(rendering::RenderResult result) {
  Require(status_ == DocStatus::kRaw, "rendered");
  render_ = std::move(result);
  status_ = DocStatus::kRendered;
}

void SynthesizedDocument::MarkEnhanced(cv::Mat page_image, bool overlays) {
  Require(status_ == DocStatus::kRendered, "enhanced");
  enhanced_ = std::move(page_image);
  has_overlays_ = overlays;
  status_ = DocStatus::kEnhanced;
}

void SynthesizedDocument::MarkVerified() {
  Require(status_ == DocStatus::kRendered || status_ == DocStatus::kEnhanced, "verified");
  status_ = DocStatus::kVerified;
}

void SynthesizedDocument::Reject(RejectReason reason, std::string detail) {
  Require(!terminal(), "rejected");
  reason_ = reason;
  detail_ = std::move(detail);
  status_ = DocStatus::kRejected;
}

}  // namespace docdjinn::synthesis
