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

#include "docdjinn/rendering/command_renderer.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include <unistd.h>

#include <opencv2/imgcodecs.hpp>

namespace docdjinn::rendering {

namespace fs = std::filesystem;

namespace {

std::atomic<int> g_counter{0};

// Scratch directory removed on scope exit.
class ScratchDir {
 public:
  ScratchDir() {
    path_ = fs::temp_directory_path() /
            ("docdjinn-render-" + std::to_string(::getpid()) + "-" + std::to_string(g_counter++));
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string Quote(const fs::path& p) { return "'" + p.string() + "'"; }

nlohmann::json Run(const std::string& command, const std::string& op, const std::string& html,
                   const ScratchDir& dir, const std::string& extra = {}) {
  const fs::path page = dir.path() / "page.html";
  {
    std::ofstream out(page, std::ios::binary);
    out << html;
  }
  const std::string cmd =
      command + " " + op + " " + Quote(page) + " " + Quote(dir.path()) + extra;
  const int rc = std::system(cmd.c_str());
  if (rc != 0) throw RenderError("render command exited with " + std::to_string(rc));
  std::ifstream in(dir.path() / "layout.json");
  if (!in) throw RenderError("render command wrote no layout.json");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw RenderError(std::string("malformed layout.json: ") + e.what());
  }
}

}  // namespace

PageSize CommandRenderBackend::Measure(const std::string& html) {
  ScratchDir dir;
  const auto j = Run(command_, "measure", html, dir);
  try {
    return {j.at("width").get<int>(), j.at("height").get<int>()};
  } catch (const nlohmann::json::exception& e) {
    throw RenderError(std::string("bad measure output: ") + e.what());
  }
}

RenderResult CommandRenderBackend::Render(const std::string& html, PageSize size) {
  if (size.width <= 0 || size.height <= 0) throw RenderError("page size must be positive");
  ScratchDir dir;
  const auto layout = Run(command_, "render", html, dir,
                          " " + std::to_string(size.width) + " " + std::to_string(size.height));
  RenderResult result;
  try {
    result = RenderLayoutFromJson(layout);
  } catch (const nlohmann::json::exception& e) {
    throw RenderError(std::string("bad render output: ") + e.what());
  }
  result.page_image = cv::imread((dir.path() / "page.png").string(), cv::IMREAD_COLOR);
  if (result.page_image.empty()) throw RenderError("render command wrote no page.png");
  if (std::ifstream pdf(dir.path() / "page.pdf", std::ios::binary); pdf) {
    result.pdf.assign(std::istreambuf_iterator<char>(pdf), {});
  }
  return result;
}

}  // namespace docdjinn::rendering
