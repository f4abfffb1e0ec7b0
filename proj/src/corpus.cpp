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

#include "newsdeps/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "newsdeps/errors.hpp"

namespace newsdeps {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kWhitespace = " \t\r\n\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

bool is_hex_color(std::string_view s) {
  if (s.size() != 7 || s[0] != '#') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
           (c >= 'A' && c <= 'F');
  });
}

bool is_absolute_url(std::string_view s) {
  const auto colon = s.find("://");
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = s[i];
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (i > 0 && ((c >= '0' && c <= '9') || c == '+' ||
                               c == '-' || c == '.'));
    if (!ok) return false;
  }
  return s.size() > colon + 3;
}

const std::unordered_set<std::string_view>& known_keys() {
  static const std::unordered_set<std::string_view> keys = {
      "id",  "publisher", "title",     "main_text",
      "published_at", "url", "image_url", "color"};
  return keys;
}

std::string required_string(const ojson& obj, std::size_t index,
                            const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) throw InvalidArticle(index, field, "is missing");
  if (!it->is_string()) throw InvalidArticle(index, field, "is not a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const ojson& obj,
                                           std::size_t index,
                                           const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw InvalidArticle(index, field, "is not a string");
  return it->get<std::string>();
}

void validate(const Article& a, std::size_t index) {
  if (trim(a.publisher).empty()) throw InvalidArticle(index, "publisher", "is empty");
  if (trim(a.title).empty()) throw InvalidArticle(index, "title", "is empty");
  if (trim(a.main_text).empty()) throw InvalidArticle(index, "main_text", "is empty");
  if (a.published_at.text().empty()) {
    throw InvalidArticle(index, "published_at", "is missing");
  }
  if (a.url && !is_absolute_url(*a.url)) {
    throw InvalidArticle(index, "url", "is not an absolute URL");
  }
  if (a.image_url && !is_absolute_url(*a.image_url)) {
    throw InvalidArticle(index, "image_url", "is not an absolute URL");
  }
  if (a.color && !is_hex_color(*a.color)) {
    throw InvalidArticle(index, "color", "is not a #RRGGBB color");
  }
}

}  // namespace

std::vector<std::string> split_paragraphs(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::string current;
  auto flush = [&] {
    const auto t = trim(current);
    if (!t.empty()) paragraphs.emplace_back(t);
    current.clear();
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    if (trim(line).empty()) {
      flush();
    } else {
      if (!current.empty()) current += '\n';
      current += line;
    }
    pos = nl + 1;
  }
  flush();
  return paragraphs;
}

std::string Article::lead_paragraph() const {
  auto paragraphs = split_paragraphs(main_text);
  return paragraphs.empty() ? std::string() : std::move(paragraphs.front());
}

Corpus Corpus::from_articles(std::vector<Article> articles) {
  Corpus corpus;
  std::unordered_set<std::string> explicit_ids;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    validate(articles[i], i);
    if (!articles[i].id.empty() && !explicit_ids.insert(articles[i].id).second) {
      throw InvalidArticle(i, "id", "duplicates '" + articles[i].id + "'");
    }
  }
  std::unordered_set<std::string> seen = explicit_ids;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    Article& a = articles[i];
    if (!a.id.empty()) continue;
    a.id = a.publisher + "-" + a.published_at.text() + "-" + std::to_string(i);
    if (!seen.insert(a.id).second) {
      throw InvalidArticle(i, "id", "synthesized id '" + a.id + "' collides");
    }
  }

  corpus.articles_ = std::move(articles);
  const auto& arts = corpus.articles_;
  corpus.order_.resize(arts.size());
  std::iota(corpus.order_.begin(), corpus.order_.end(), std::size_t{0});
  std::sort(corpus.order_.begin(), corpus.order_.end(),
            [&](std::size_t x, std::size_t y) {
              if (arts[x].published_at != arts[y].published_at) {
                return arts[x].published_at < arts[y].published_at;
              }
              return arts[x].id < arts[y].id;
            });

  // Equal timestamps are contiguous in chronological order.
  const auto& order = corpus.order_;
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      const Article& a = arts[order[p]];
      const Article& b = arts[order[q]];
      if (a.published_at != b.published_at) break;
      corpus.warnings_.push_back("articles '" + a.id + "' and '" + b.id +
                                 "' share published_at " +
                                 format_utc(a.published_at.unix_seconds()) +
                                 "; no dependency direction assigned");
    }
  }
  return corpus;
}

std::vector<std::string> Corpus::chronological_ids() const {
  std::vector<std::string> ids;
  ids.reserve(order_.size());
  for (const std::size_t idx : order_) ids.push_back(articles_[idx].id);
  return ids;
}

std::optional<std::size_t> Corpus::find(std::string_view id) const {
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    if (articles_[i].id == id) return i;
  }
  return std::nullopt;
}

Corpus parse_article_json(std::string_view bytes) {
  ojson doc;
  try {
    doc = ojson::parse(bytes);
  } catch (const ojson::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw MalformedInput("expected a JSON array of articles");

  std::vector<Article> articles;
  articles.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const ojson& obj = doc[i];
    if (!obj.is_object()) {
      throw MalformedInput("element " + std::to_string(i) + " is not an object");
    }
    Article a;
    if (auto id = optional_string(obj, i, "id")) {
      if (id->empty()) throw InvalidArticle(i, "id", "is empty");
      a.id = std::move(*id);
    }
    a.publisher = required_string(obj, i, "publisher");
    a.title = required_string(obj, i, "title");
    a.main_text = required_string(obj, i, "main_text");
    const std::string when = required_string(obj, i, "published_at");
    auto ts = Timestamp::parse(when);
    if (!ts) throw InvalidArticle(i, "published_at", "is not an RFC 3339 date-time");
    a.published_at = std::move(*ts);
    a.url = optional_string(obj, i, "url");
    a.image_url = optional_string(obj, i, "image_url");
    a.color = optional_string(obj, i, "color");
    for (const auto& [key, value] : obj.items()) {
      if (!known_keys().contains(key)) a.extra[key] = value;
    }
    articles.push_back(std::move(a));
  }
  return Corpus::from_articles(std::move(articles));
}

nlohmann::ordered_json articles_to_json(const Corpus& corpus) {
  ojson out = ojson::array();
  for (const Article& a : corpus.articles()) {
    ojson obj;
    obj["id"] = a.id;
    obj["publisher"] = a.publisher;
    obj["title"] = a.title;
    obj["main_text"] = a.main_text;
    obj["published_at"] = a.published_at.text();
    if (a.url) obj["url"] = *a.url;
    if (a.image_url) obj["image_url"] = *a.image_url;
    if (a.color) obj["color"] = *a.color;
    for (const auto& [key, value] : a.extra.items()) obj[key] = value;
    out.push_back(std::move(obj));
  }
  return out;
}

std::string serialize_articles(const Corpus& corpus) {
  return articles_to_json(corpus).dump(2) + "\n";
}

std::vector<ChronoPair> chronological_pairs(const Corpus& corpus) {
  std::vector<ChronoPair> pairs;
  const std::size_t k = corpus.size();
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      if (corpus.chronological(p).published_at <
          corpus.chronological(q).published_at) {
        pairs.push_back({p, q});
      }
    }
  }
  return pairs;
}

}  // namespace newsdeps
