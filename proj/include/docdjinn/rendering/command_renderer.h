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

#ifndef DOCDJINN_RENDERING_COMMAND_RENDERER_H_
#define DOCDJINN_RENDERING_COMMAND_RENDERER_H_

#include <string>

#include "docdjinn/rendering/render.h"

namespace docdjinn::rendering {

// Delegates layout to an external program, normally the headless browser
// driver in tools/render_playwright.py. Invocations:
//
//   <command> measure <page.html> <out_dir>
//   <command> render  <page.html> <out_dir> <width> <height>
//
// `measure` writes out_dir/layout.json with {"width", "height"}. `render`
// writes out_dir/layout.json in RenderLayoutToJson form, out_dir/page.png
// and optionally out_dir/page.pdf. A non-zero exit or missing output is a
// RenderError.
class CommandRenderBackend : public RenderBackend {
 public:
  explicit CommandRenderBackend(std::string command) : command_(std::move(command)) {}

  std::string name() const override { return "command"; }
  PageSize Measure(const std::string& html) override;
  RenderResult Render(const std::string& html, PageSize size) override;

 private:
  std::string command_;
};

}  // namespace docdjinn::rendering

#endif  // DOCDJINN_RENDERING_COMMAND_RENDERER_H_
