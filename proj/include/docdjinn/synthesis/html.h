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

#ifndef DOCDJINN_SYNTHESIS_HTML_H_
#define DOCDJINN_SYNTHESIS_HTML_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace docdjinn::html {

// Attribute stamped on every element before rendering so that renderer
// boxes can be joined back to parsed elements.
inline constexpr std::string_view kRefAttribute = "data-ddj-ref";

struct Node {
  enum class Kind { kElement, kText };

  Kind kind = Kind::kElement;
  std::string tag;  // lower-case; empty for text nodes
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // decoded character data of text nodes
  Node* parent = nullptr;
  std::vector<std::unique_ptr<Node>> children;

  bool is_element() const { return kind == Kind::kElement; }
  const std::string* Attr(std::string_view name) const;
  void SetAttr(std::string_view name, std::string value);
};

// A parsed HTML tree. Parsing never fails: unknown or mismatched markup is
// recovered the way tag-soup parsers do (stray end tags are dropped, open
// elements are closed implicitly, <p>/<li>/<td>/<tr> auto-close).
class Document {
 public:
  static Document Parse(std::string_view html);

  Document(Document&&) = default;
  Document& operator=(Document&&) = default;

  const Node& root() const { return *root_; }
  Node& root() { return *root_; }

  // Elements in document (pre-)order.
  std::vector<const Node*> Elements() const;
  std::vector<Node*> MutableElements();

  // First element with this tag, or nullptr.
  const Node* FindFirst(std::string_view tag) const;

  // Stamps kRefAttribute="e<index>" on every element (pre-order index).
  void AssignRefs();

  std::string Serialize() const;

 private:
  Document();
  std::unique_ptr<Node> root_;
  std::string doctype_;
};

// The element's reference as stamped by AssignRefs (empty if unset).
std::string RefOf(const Node& element);

std::vector<std::string> ClassTokens(const Node& element);
bool HasClass(const Node& element, std::string_view token);

// Concatenated character data below `node` with whitespace collapsed;
// script and style content is skipped. <br> separates words.
std::string TextContent(const Node& node);

// True when `tag` lays out as a block in the constrained renderer.
bool IsBlockTag(std::string_view tag);
bool IsVoidTag(std::string_view tag);

// Declarations of a style attribute, property names lower-cased.
std::map<std::string, std::string> ParseStyle(std::string_view style);

// Converts a CSS length to pixels at `dpi`. Supports px, mm, cm, in, pt, pc
// and unitless numbers; returns nullopt for anything else (%, auto, em...).
std::optional<double> ParseLengthPx(std::string_view value, double dpi = 96.0);

std::string EscapeText(std::string_view s);
std::string EscapeAttribute(std::string_view s);
std::string DecodeEntities(std::string_view s);

}  // namespace docdjinn::html

#endif  // DOCDJINN_SYNTHESIS_HTML_H_
