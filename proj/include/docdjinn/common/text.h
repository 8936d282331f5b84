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

#ifndef DOCDJINN_COMMON_TEXT_H_
#define DOCDJINN_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace docdjinn {

std::string AsciiLower(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);
std::string_view Trim(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::string CollapseWhitespace(std::string_view s);
bool StartsWith(std::string_view s, std::string_view prefix);

// UTF-8 decoding; invalid bytes decode as U+FFFD.
std::u32string DecodeUtf8(std::string_view s);
std::string EncodeUtf8(std::u32string_view s);

// Simple case folding for ASCII and the Latin-1, Latin Extended-A, Greek and
// Cyrillic blocks.
char32_t FoldCase(char32_t c);

// Number of code points.
size_t Utf8Length(std::string_view s);

}  // namespace docdjinn

#endif  // DOCDJINN_COMMON_TEXT_H_
