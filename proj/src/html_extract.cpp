// Copyright 2026 The NewsDeps Authors
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

#include "newsdeps/html_extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "newsdeps/errors.hpp"

namespace newsdeps {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string decode_entities(std::string_view s) {
  static const std::array<std::pair<std::string_view, std::string_view>, 9>
      kNamed = {{{"amp", "&"},
                 {"lt", "<"},
                 {"gt", ">"},
                 {"quot", "\""},
                 {"apos", "'"},
                 {"nbsp", "\xC2\xA0"},
                 {"mdash", "\xE2\x80\x94"},
                 {"ndash", "\xE2\x80\x93"},
                 {"hellip", "\xE2\x80\xA6"}}};
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += '&';
      continue;
    }
    const std::string_view name = s.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (name.size() > 1 && name[0] == '#') {
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const std::string digits(name.substr(hex ? 2 : 1));
      if (!digits.empty() &&
          std::all_of(digits.begin(), digits.end(), [hex](unsigned char c) {
            return hex ? std::isxdigit(c) : std::isdigit(c);
          })) {
        append_utf8(out, std::stoul(digits, nullptr, hex ? 16 : 10));
        decoded = true;
      }
    } else {
      for (const auto& [entity, text] : kNamed) {
        if (name == entity) {
          out += text;
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi;
    } else {
      out += '&';
    }
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (const char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

struct Tag {
  std::string name;
  bool closing = false;
  std::vector<std::pair<std::string, std::string>> attributes;

  std::optional<std::string> attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return v;
    }
    return std::nullopt;
  }
};

// Parses the tag starting at html[pos] == '<'. On success returns the tag
// and sets `end` to one past the closing '>'.
std::optional<Tag> parse_tag(std::string_view html, std::size_t pos,
                             std::size_t* end) {
  std::size_t i = pos + 1;
  Tag tag;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < html.size() &&
         (std::isalnum(static_cast<unsigned char>(html[i])) || html[i] == '-')) {
    ++i;
  }
  if (i == name_start) return std::nullopt;
  tag.name = lower(html.substr(name_start, i - name_start));

  while (i < html.size() && html[i] != '>') {
    if (is_space(html[i]) || html[i] == '/') {
      ++i;
      continue;
    }
    const std::size_t key_start = i;
    while (i < html.size() && !is_space(html[i]) && html[i] != '=' &&
           html[i] != '>' && html[i] != '/') {
      ++i;
    }
    std::string key = lower(html.substr(key_start, i - key_start));
    while (i < html.size() && is_space(html[i])) ++i;
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      while (i < html.size() && is_space(html[i])) ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char quote = html[i++];
        const auto close = html.find(quote, i);
        if (close == std::string_view::npos) return std::nullopt;
        value = decode_entities(html.substr(i, close - i));
        i = close + 1;
      } else {
        const std::size_t value_start = i;
        while (i < html.size() && !is_space(html[i]) && html[i] != '>') ++i;
        value = decode_entities(html.substr(value_start, i - value_start));
      }
    }
    if (!key.empty()) tag.attributes.emplace_back(std::move(key), std::move(value));
  }
  if (i >= html.size()) return std::nullopt;
  *end = i + 1;
  return tag;
}

// Skips past "</name ...>" starting the search at pos.
std::size_t skip_raw_text(std::string_view html, std::size_t pos,
                          const std::string& name) {
  const std::string needle = "</" + name;
  while (pos < html.size()) {
    const auto lt = html.find('<', pos);
    if (lt == std::string_view::npos) return html.size();
    if (lower(html.substr(lt, needle.size())) == needle) {
      const auto gt = html.find('>', lt);
      return gt == std::string_view::npos ? html.size() : gt + 1;
    }
    pos = lt + 1;
  }
  return html.size();
}

bool is_block_tag(const std::string& name) {
  static const std::unordered_set<std::string> kBlocks = {
      "p",      "div",  "article", "section", "header", "footer", "aside",
      "nav",    "ul",   "ol",      "li",      "table",  "h1",     "h2",
      "h3",     "h4",   "h5",      "h6",      "blockquote", "figure", "main",
      "body",   "html", "form"};
  return kBlocks.contains(name);
}

struct Paragraph {
  std::string text;
  bool in_article;
};

struct PageFields {
  std::vector<std::pair<std::string, std::string>> meta;
  std::string title;
  std::vector<Paragraph> paragraphs;

  std::optional<std::string> meta_value(std::string_view key) const {
    for (const auto& [k, v] : meta) {
      if (k == key) return v;
    }
    return std::nullopt;
  }
};

PageFields scan(std::string_view html) {
  PageFields page;
  int article_depth = 0;
  bool in_title = false;
  bool title_done = false;
  std::optional<Paragraph> open_p;
  std::string raw;

  auto close_paragraph = [&] {
    if (!open_p) return;
    open_p->text = collapse_whitespace(decode_entities(raw));
    if (!open_p->text.empty()) page.paragraphs.push_back(std::move(*open_p));
    open_p.reset();
    raw.clear();
  };

  std::size_t pos = 0;
  std::string title_raw;
  while (pos < html.size()) {
    const auto lt = html.find('<', pos);
    const std::string_view text =
        html.substr(pos, (lt == std::string_view::npos ? html.size() : lt) - pos);
    if (open_p) raw += text;
    if (in_title) title_raw += text;
    if (lt == std::string_view::npos) break;

    if (html.substr(lt, 4) == "<!--") {
      const auto close = html.find("-->", lt + 4);
      pos = close == std::string_view::npos ? html.size() : close + 3;
      continue;
    }
    if (lt + 1 < html.size() && (html[lt + 1] == '!' || html[lt + 1] == '?')) {
      const auto gt = html.find('>', lt);
      pos = gt == std::string_view::npos ? html.size() : gt + 1;
      continue;
    }
    std::size_t end = 0;
    const auto tag = parse_tag(html, lt, &end);
    if (!tag) {
      if (open_p) raw += '<';
      if (in_title) title_raw += '<';
      pos = lt + 1;
      continue;
    }
    pos = end;
    const std::string& name = tag->name;

    if (!tag->closing &&
        (name == "script" || name == "style" || name == "noscript" ||
         name == "template")) {
      pos = skip_raw_text(html, pos, name);
      continue;
    }
    if (name == "meta" && !tag->closing) {
      auto key = tag->attribute("property");
      if (!key) key = tag->attribute("name");
      const auto content = tag->attribute("content");
      if (key && content) page.meta.emplace_back(lower(*key), *content);
      continue;
    }
    if (name == "title") {
      if (!tag->closing && !title_done) {
        in_title = true;
      } else if (tag->closing && in_title) {
        in_title = false;
        title_done = true;
        page.title = collapse_whitespace(decode_entities(title_raw));
      }
      continue;
    }
    if (name == "br" && open_p) {
      raw += ' ';
      continue;
    }
    if (is_block_tag(name)) close_paragraph();
    if (name == "article") {
      article_depth += tag->closing ? (article_depth > 0 ? -1 : 0) : 1;
    } else if (name == "p" && !tag->closing) {
      open_p = Paragraph{{}, article_depth > 0};
    }
  }
  close_paragraph();
  if (in_title) page.title = collapse_whitespace(decode_entities(title_raw));
  return page;
}

std::string non_empty(std::optional<std::string> s) {
  if (!s) return {};
  return collapse_whitespace(*s);
}

// Multi-label public suffixes. Single-label TLDs are handled implicitly.
const std::unordered_set<std::string_view>& multi_label_suffixes() {
  static const std::unordered_set<std::string_view> kSuffixes = {
      "co.uk",  "org.uk", "ac.uk",  "gov.uk", "ltd.uk", "plc.uk", "me.uk",
      "net.uk", "sch.uk", "nhs.uk", "police.uk",
      "com.au", "net.au", "org.au", "edu.au", "gov.au", "asn.au", "id.au",
      "co.nz",  "net.nz", "org.nz", "govt.nz", "ac.nz",
      "co.jp",  "ne.jp",  "or.jp",  "ac.jp",  "go.jp",
      "co.kr",  "or.kr",  "go.kr",  "ac.kr",
      "com.br", "net.br", "org.br", "gov.br",
      "com.cn", "net.cn", "org.cn", "gov.cn",
      "com.hk", "com.sg", "com.tw", "com.my", "com.tr", "com.ua",
      "com.mx", "com.ar", "com.co", "com.pe", "com.eg", "com.sa",
      "co.in",  "net.in", "org.in", "gov.in", "ac.in",
      "co.za",  "org.za", "gov.za",
      "co.il",  "org.il", "ac.il",  "gov.il",
      "co.id",  "or.id",  "ac.id",  "go.id",
      "co.th",  "in.th",  "ac.th",  "go.th",
      "com.pl", "net.pl", "org.pl",
      "gv.at",  "co.at",  "or.at",  "ac.at",
      "com.es", "org.es", "gob.es",
      "com.ng", "co.ke",  "or.ke",
  };
  return kSuffixes;
}

bool is_ipv4(std::string_view host) {
  if (host.empty()) return false;
  return std::all_of(host.begin(), host.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.';
  });
}

}  // namespace

std::string url_host(std::string_view url) {
  auto scheme = url.find("://");
  std::string_view rest = scheme == std::string_view::npos ? url : url.substr(scheme + 3);
  rest = rest.substr(0, rest.find_first_of("/?#"));
  if (const auto at = rest.rfind('@'); at != std::string_view::npos) {
    rest = rest.substr(at + 1);
  }
  if (!rest.empty() && rest.front() == '[') {
    const auto close = rest.find(']');
    return lower(rest.substr(0, close == std::string_view::npos ? rest.size() : close + 1));
  }
  rest = rest.substr(0, rest.find(':'));
  std::string host = lower(rest);
  while (!host.empty() && host.back() == '.') host.pop_back();
  return host;
}

std::string registrable_domain(std::string_view host_in) {
  std::string host = lower(host_in);
  if (host.empty() || is_ipv4(host) || host.front() == '[') return host;
  std::vector<std::size_t> dots;
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (host[i] == '.') dots.push_back(i);
  }
  if (dots.empty()) return host;
  // Longest matching multi-label suffix wins; otherwise the TLD is the suffix.
  std::size_t suffix_labels = 1;
  for (std::size_t n = dots.size(); n >= 1; --n) {
    const std::string_view candidate =
        std::string_view(host).substr(dots[dots.size() - n] + 1);
    if (n >= 2 && multi_label_suffixes().contains(candidate)) {
      suffix_labels = n;
      break;
    }
  }
  if (suffix_labels >= dots.size()) return host;
  return host.substr(dots[dots.size() - suffix_labels - 1] + 1);
}

Article extract_from_html(std::string_view html, std::string_view url) {
  const PageFields page = scan(html);
  Article article;

  article.title = non_empty(page.meta_value("og:title"));
  if (article.title.empty()) article.title = page.title;
  if (article.title.empty()) throw ParseFailure("title");

  const std::string when = non_empty(page.meta_value("article:published_time"));
  auto ts = Timestamp::parse(when);
  if (!ts) throw ParseFailure("published_at");
  article.published_at = std::move(*ts);

  article.publisher = non_empty(page.meta_value("og:site_name"));
  if (article.publisher.empty()) article.publisher = registrable_domain(url_host(url));
  if (article.publisher.empty()) throw ParseFailure("publisher");

  const bool has_article = std::any_of(
      page.paragraphs.begin(), page.paragraphs.end(),
      [](const Paragraph& p) { return p.in_article; });
  for (const Paragraph& p : page.paragraphs) {
    if (has_article && !p.in_article) continue;
    if (!article.main_text.empty()) article.main_text += "\n\n";
    article.main_text += p.text;
  }
  if (article.main_text.empty()) throw ParseFailure("main_text");

  if (!url.empty()) article.url = std::string(url);
  if (auto image = non_empty(page.meta_value("og:image")); !image.empty()) {
    article.image_url = std::move(image);
  }
  return article;
}

}  // namespace newsdeps
