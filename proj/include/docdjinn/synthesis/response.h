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

#ifndef DOCDJINN_SYNTHESIS_RESPONSE_H_
#define DOCDJINN_SYNTHESIS_RESPONSE_H_

#include <string>
#include <string_view>
#include <vector>

namespace docdjinn::synthesis {

struct DroppedBlock {
  int index = 0;  // 1-based position among <HTML> openings
  std::string reason;
};

struct ParsedResponse {
  std::vector<std::string> documents;  // inner content of each valid block
  std::vector<DroppedBlock> dropped;
};

// Splits a model response into its <HTML>...</HTML> blocks (tag match is
// case-sensitive, so the inner <html> element is not mistaken for a block).
ParsedResponse ParseResponse(std::string_view raw);

}  // namespace docdjinn::synthesis

#endif  // DOCDJINN_SYNTHESIS_RESPONSE_H_
