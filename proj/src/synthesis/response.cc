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

#include "docdjinn/synthesis/response.h"

#include <spdlog/spdlog.h>

#include "docdjinn/common/text.h"

namespace docdjinn::synthesis {

ParsedResponse ParseResponse(std::string_view raw) {
  constexpr std::string_view kOpen = "<HTML>";
  constexpr std::string_view kClose = "</HTML>";
  ParsedResponse out;
  int index = 0;
  size_t pos = raw.find(kOpen);
  while (pos != std::string_view::npos) {
    ++index;
    const size_t begin = pos + kOpen.size();
    const size_t close = raw.find(kClose, begin);
    const size_t next_open = raw.find(kOpen, begin);
    if (close == std::string_view::npos || (next_open != std::string_view::npos && next_open < close)) {
      out.dropped.push_back({index, "unterminated <HTML> block"});
      pos = next_open;
      continue;
    }
    const std::string_view inner = raw.substr(begin, close - begin);
    if (AsciiLower(inner).find("<html") == std::string::npos) {
      out.dropped.push_back({index, "block has no <html> element"});
    } else {
      out.documents.emplace_back(Trim(inner));
    }
    pos = raw.find(kOpen, close + kClose.size());
  }
  for (const DroppedBlock& d : out.dropped) {
    spdlog::debug("response block {} dropped: {}", d.index, d.reason);
  }
  if (out.documents.empty()) spdlog::warn("response contained no valid <HTML> blocks");
  return out;
}

}  // namespace docdjinn::synthesis
