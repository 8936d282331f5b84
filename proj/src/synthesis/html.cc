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

#include "docdjinn/synthesis/html.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "docdjinn/common/text.h"

namespace docdjinn::html {

namespace {

constexpr std::array<std::string_view, 14> kVoidTags = {
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

constexpr std::array<std::string_view, 4> kRawTextTags = {"script", "style",
                                                          "textarea", "title"};

constexpr std::array<std::string_view, 38> kBlockTags = {
    "html",    "body",   "div",     "p",        "h1",         "h2",
    "h3",      "h4",     "h5",      "h6",       "table",      "thead",
    "tbody",   "tfoot",  "tr",      "ul",       "ol",         "li",
    "section", "header", "footer",  "article",  "main",       "form",
    "hr",      "address", "blockquote", "pre",  "figure",     "figcaption",
    "nav",     "aside",  "dl",      "dt",       "dd",         "caption",
    "fieldset", "center"};

// Opening one of these closes an open <p>.
constexpr std::array<std::string_view, 22> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "div", "dl", "fieldset",
    "footer",  "form",    "h1",    "h2",         "h3",  "h4", "h5",
    "h6",      "header",  "hr",    "main",       "nav", "ol", "p",
    "table"};

template <size_t N>
bool In(const std::array<std::string_view, N>& set, std::string_view v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         c == ':' || c == '.';
}

bool IsSpaceChar(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

class Parser {
 public:
  Parser(std::string_view src, Node* root, std::string* doctype)
      : src_(src), doctype_(doctype) {
    stack_.push_back(root);
  }

  void Run() {
    while (pos_ < src_.size()) {
      const size_t lt = src_.find('<', pos_);
      if (lt == std::string_view::npos) {
        AppendText(src_.substr(pos_));
        break;
      }
      if (lt > pos_) AppendText(src_.substr(pos_, lt - pos_));
      pos_ = lt;
      if (!ParseMarkup()) {
        AppendText("<");
        ++pos_;
      }
    }
  }

 private:
  Node* current() { return stack_.back(); }

  void AppendText(std::string_view raw) {
    if (raw.empty()) return;
    std::string decoded = DecodeEntities(raw);
    Node* parent = current();
    if (!parent->children.empty() && !parent->children.back()->is_element()) {
      parent->children.back()->text += decoded;
      return;
    }
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::kText;
    node->text = std::move(decoded);
    node->parent = parent;
    parent->children.push_back(std::move(node));
  }

  // Returns false when '<' does not start markup.
  bool ParseMarkup() {
    std::string_view rest = src_.substr(pos_);
    if (StartsWith(rest, "<!--")) {
      const size_t end = src_.find("-->", pos_ + 4);
      pos_ = end == std::string_view::npos ? src_.size() : end + 3;
      return true;
    }
    if (StartsWith(rest, "<![CDATA[")) {
      const size_t end = src_.find("]]>", pos_);
      const size_t begin = pos_ + 9;
      if (end == std::string_view::npos) {
        AppendText(src_.substr(begin));
        pos_ = src_.size();
      } else {
        AppendText(src_.substr(begin, end - begin));
        pos_ = end + 3;
      }
      return true;
    }
    if (StartsWith(rest, "<!") || StartsWith(rest, "<?")) {
      const size_t end = src_.find('>', pos_);
      const std::string_view decl =
          src_.substr(pos_, end == std::string_view::npos ? std::string_view::npos
                                                          : end - pos_ + 1);
      if (doctype_ && doctype_->empty() &&
          EqualsIgnoreCase(decl.substr(0, std::min<size_t>(9, decl.size())), "<!doctype")) {
        *doctype_ = std::string(decl);
      }
      pos_ = end == std::string_view::npos ? src_.size() : end + 1;
      return true;
    }
    if (rest.size() >= 2 && rest[1] == '/') {
      if (rest.size() < 3 || !std::isalpha(static_cast<unsigned char>(rest[2]))) {
        return false;
      }
      size_t i = pos_ + 2;
      while (i < src_.size() && IsNameChar(src_[i])) ++i;
      const std::string tag = AsciiLower(src_.substr(pos_ + 2, i - pos_ - 2));
      const size_t end = src_.find('>', i);
      pos_ = end == std::string_view::npos ? src_.size() : end + 1;
      CloseTag(tag);
      return true;
    }
    if (rest.size() < 2 || !std::isalpha(static_cast<unsigned char>(rest[1]))) {
      return false;
    }
    ParseStartTag();
    return true;
  }

  void ParseStartTag() {
    size_t i = pos_ + 1;
    while (i < src_.size() && IsNameChar(src_[i])) ++i;
    auto node = std::make_unique<Node>();
    node->tag = AsciiLower(src_.substr(pos_ + 1, i - pos_ - 1));
    bool self_closing = false;
    while (i < src_.size()) {
      while (i < src_.size() && IsSpaceChar(src_[i])) ++i;
      if (i >= src_.size()) break;
      if (src_[i] == '>') {
        ++i;
        break;
      }
      if (src_[i] == '/') {
        self_closing = true;
        ++i;
        continue;
      }
      const size_t name_begin = i;
      while (i < src_.size() && !IsSpaceChar(src_[i]) && src_[i] != '=' &&
             src_[i] != '>' && src_[i] != '/') {
        ++i;
      }
      if (i == name_begin) {
        ++i;
        continue;
      }
      std::string name = AsciiLower(src_.substr(name_begin, i - name_begin));
      std::string value;
      while (i < src_.size() && IsSpaceChar(src_[i])) ++i;
      if (i < src_.size() && src_[i] == '=') {
        ++i;
        while (i < src_.size() && IsSpaceChar(src_[i])) ++i;
        if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
          const char quote = src_[i];
          const size_t end = src_.find(quote, i + 1);
          const size_t stop = end == std::string_view::npos ? src_.size() : end;
          value = DecodeEntities(src_.substr(i + 1, stop - i - 1));
          i = end == std::string_view::npos ? src_.size() : end + 1;
        } else {
          const size_t begin = i;
          while (i < src_.size() && !IsSpaceChar(src_[i]) && src_[i] != '>') ++i;
          value = DecodeEntities(src_.substr(begin, i - begin));
        }
      }
      if (!node->Attr(name)) node->attributes.emplace_back(std::move(name), std::move(value));
    }
    pos_ = i;
    const std::string tag = node->tag;
    ImplicitClose(tag);
    Node* parent = current();
    node->parent = parent;
    Node* raw = node.get();
    parent->children.push_back(std::move(node));
    if (IsVoidTag(tag) || self_closing) return;
    if (In(kRawTextTags, tag)) {
      // Character data runs to the matching end tag.
      size_t search = pos_;
      size_t end = std::string_view::npos;
      while (search < src_.size()) {
        const size_t cand = src_.find("</", search);
        if (cand == std::string_view::npos) break;
        if (EqualsIgnoreCase(src_.substr(cand + 2, tag.size()), tag)) {
          end = cand;
          break;
        }
        search = cand + 2;
      }
      const size_t stop = end == std::string_view::npos ? src_.size() : end;
      if (stop > pos_) {
        auto text = std::make_unique<Node>();
        text->kind = Node::Kind::kText;
        text->text = std::string(src_.substr(pos_, stop - pos_));
        text->parent = raw;
        raw->children.push_back(std::move(text));
      }
      if (end == std::string_view::npos) {
        pos_ = src_.size();
      } else {
        const size_t gt = src_.find('>', end);
        pos_ = gt == std::string_view::npos ? src_.size() : gt + 1;
      }
      return;
    }
    stack_.push_back(raw);
  }

  bool OpenWithin(std::string_view tag, std::initializer_list<std::string_view> stop_at) {
    for (size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == tag) return true;
      for (auto s : stop_at) {
        if (stack_[i]->tag == s) return false;
      }
    }
    return false;
  }

  void ImplicitClose(const std::string& tag) {
    if (In(kClosesParagraph, tag) || tag == "li" || tag == "ul") {
      if (OpenWithin("p", {"div", "td", "th", "li", "table", "body"})) CloseTag("p");
    }
    if (tag == "li" && OpenWithin("li", {"ul", "ol"})) CloseTag("li");
    if ((tag == "dt" || tag == "dd")) {
      if (OpenWithin("dt", {"dl"})) CloseTag("dt");
      if (OpenWithin("dd", {"dl"})) CloseTag("dd");
    }
    if (tag == "td" || tag == "th") {
      if (OpenWithin("td", {"tr", "table"})) CloseTag("td");
      if (OpenWithin("th", {"tr", "table"})) CloseTag("th");
    }
    if (tag == "tr" && OpenWithin("tr", {"table"})) CloseTag("tr");
    if (tag == "option" && OpenWithin("option", {"select"})) CloseTag("option");
  }

  void CloseTag(const std::string& tag) {
    for (size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == tag) {
        stack_.resize(i);
        return;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  std::vector<Node*> stack_;
  std::string* doctype_;
};

void CollectText(const Node& node, std::string& out) {
  if (!node.is_element()) {
    out += node.text;
    return;
  }
  if (node.tag == "script" || node.tag == "style" || node.tag == "head" ||
      node.tag == "title") {
    return;
  }
  if (node.tag == "br" || IsBlockTag(node.tag) || node.tag == "td" || node.tag == "th") {
    out.push_back(' ');
  }
  for (const auto& child : node.children) CollectText(*child, out);
  if (IsBlockTag(node.tag) || node.tag == "td" || node.tag == "th") out.push_back(' ');
}

void SerializeNode(const Node& node, std::string& out) {
  if (!node.is_element()) {
    const bool raw = node.parent && In(kRawTextTags, node.parent->tag) &&
                     node.parent->tag != "textarea" && node.parent->tag != "title";
    out += raw ? node.text : EscapeText(node.text);
    return;
  }
  out += '<';
  out += node.tag;
  for (const auto& [name, value] : node.attributes) {
    out += ' ';
    out += name;
    out += "=\"";
    out += EscapeAttribute(value);
    out += '"';
  }
  out += '>';
  if (IsVoidTag(node.tag)) return;
  for (const auto& child : node.children) SerializeNode(*child, out);
  out += "</";
  out += node.tag;
  out += '>';
}

struct Entity {
  std::string_view name;
  char32_t cp;
};

constexpr std::array<Entity, 24> kEntities{{
    {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},      {"quot", U'"'},
    {"apos", U'\''},   {"nbsp", U' '},    {"copy", 0xA9},    {"reg", 0xAE},
    {"euro", 0x20AC},  {"pound", 0xA3},   {"yen", 0xA5},     {"cent", 0xA2},
    {"mdash", 0x2014}, {"ndash", 0x2013}, {"hellip", 0x2026}, {"deg", 0xB0},
    {"times", 0xD7},   {"middot", 0xB7},  {"bull", 0x2022},  {"sect", 0xA7},
    {"para", 0xB6},    {"laquo", 0xAB},   {"raquo", 0xBB},   {"trade", 0x2122},
}};

}  // namespace

const std::string* Node::Attr(std::string_view name) const {
  for (const auto& [k, v] : attributes) {
    if (k == name) return &v;
  }
  return nullptr;
}

void Node::SetAttr(std::string_view name, std::string value) {
  for (auto& [k, v] : attributes) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  attributes.emplace_back(std::string(name), std::move(value));
}

Document::Document() : root_(std::make_unique<Node>()) { root_->tag = "#document"; }

Document Document::Parse(std::string_view html) {
  Document doc;
  Parser(html, doc.root_.get(), &doc.doctype_).Run();
  return doc;
}

std::vector<const Node*> Document::Elements() const {
  std::vector<const Node*> out;
  std::vector<const Node*> stack;
  for (auto it = root_->children.rbegin(); it != root_->children.rend(); ++it) {
    stack.push_back(it->get());
  }
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!n->is_element()) continue;
    out.push_back(n);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      stack.push_back(it->get());
    }
  }
  return out;
}

std::vector<Node*> Document::MutableElements() {
  std::vector<Node*> out;
  for (const Node* n : Elements()) out.push_back(const_cast<Node*>(n));
  return out;
}

const Node* Document::FindFirst(std::string_view tag) const {
  for (const Node* n : Elements()) {
    if (n->tag == tag) return n;
  }
  return nullptr;
}

void Document::AssignRefs() {
  int index = 0;
  for (Node* n : MutableElements()) {
    n->SetAttr(kRefAttribute, "e" + std::to_string(index++));
  }
}

std::string Document::Serialize() const {
  std::string out = doctype_;
  for (const auto& child : root_->children) SerializeNode(*child, out);
  return out;
}

std::string RefOf(const Node& element) {
  const std::string* ref = element.Attr(kRefAttribute);
  return ref ? *ref : std::string();
}

std::vector<std::string> ClassTokens(const Node& element) {
  const std::string* cls = element.Attr("class");
  if (!cls) return {};
  return SplitWhitespace(*cls);
}

bool HasClass(const Node& element, std::string_view token) {
  for (const std::string& t : ClassTokens(element)) {
    if (EqualsIgnoreCase(t, token)) return true;
  }
  return false;
}

std::string TextContent(const Node& node) {
  std::string raw;
  CollectText(node, raw);
  return CollapseWhitespace(raw);
}

bool IsBlockTag(std::string_view tag) { return In(kBlockTags, tag); }
bool IsVoidTag(std::string_view tag) { return In(kVoidTags, tag); }

std::map<std::string, std::string> ParseStyle(std::string_view style) {
  std::map<std::string, std::string> out;
  size_t pos = 0;
  while (pos <= style.size()) {
    size_t end = style.find(';', pos);
    if (end == std::string_view::npos) end = style.size();
    const std::string_view decl = style.substr(pos, end - pos);
    const size_t colon = decl.find(':');
    if (colon != std::string_view::npos) {
      const std::string name = AsciiLower(Trim(decl.substr(0, colon)));
      std::string value(Trim(decl.substr(colon + 1)));
      if (const size_t imp = AsciiLower(value).find("!important");
          imp != std::string::npos) {
        value = std::string(Trim(std::string_view(value).substr(0, imp)));
      }
      if (!name.empty()) out[name] = value;
    }
    pos = end + 1;
  }
  return out;
}

std::optional<double> ParseLengthPx(std::string_view value, double dpi) {
  const std::string v = AsciiLower(Trim(value));
  if (v.empty()) return std::nullopt;
  char* end = nullptr;
  const double num = std::strtod(v.c_str(), &end);
  if (end == v.c_str()) return std::nullopt;
  const std::string_view unit = Trim(std::string_view(end));
  if (unit.empty() || unit == "px") return num * dpi / 96.0;
  if (unit == "mm") return num * dpi / 25.4;
  if (unit == "cm") return num * dpi / 2.54;
  if (unit == "in") return num * dpi;
  if (unit == "pt") return num * dpi / 72.0;
  if (unit == "pc") return num * dpi / 6.0;
  return std::nullopt;
}

std::string EscapeText(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string EscapeAttribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '<': out += "&lt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string DecodeEntities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    const size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(s[i++]);
      continue;
    }
    const std::string_view name = s.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (!name.empty() && name[0] == '#') {
      unsigned long v = 0;
      const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      const std::string_view digits = name.substr(hex ? 2 : 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v,
                                     hex ? 16 : 10);
      if (ec == std::errc() && p == digits.data() + digits.size() && v > 0 &&
          v < 0x110000) {
        cp = static_cast<char32_t>(v);
      }
    } else {
      for (const Entity& e : kEntities) {
        if (e.name == name) cp = e.cp;
      }
    }
    if (!cp) {
      out.push_back(s[i++]);
      continue;
    }
    out += EncodeUtf8(std::u32string(1, *cp == 0xA0 ? U' ' : *cp));
    i = semi + 1;
  }
  return out;
}

}  // namespace docdjinn::html
