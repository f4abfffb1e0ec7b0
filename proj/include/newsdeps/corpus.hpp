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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "newsdeps/timestamp.hpp"

namespace newsdeps {

// One news document. `extra` carries unknown JSON keys so that they survive
// a parse/serialize round trip untouched.
struct Article {
  std::string id;
  std::string publisher;
  std::string title;
  std::string main_text;
  Timestamp published_at;
  std::optional<std::string> url;
  std::optional<std::string> image_url;
  std::optional<std::string> color;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  // First paragraph of main_text; paragraphs are separated by blank lines.
  std::string lead_paragraph() const;
};

// Splits text on blank lines, trimming each paragraph and dropping empties.
std::vector<std::string> split_paragraphs(std::string_view text);

// Chronological positions (indices into Corpus::order()) of an article pair
// with strictly increasing publication time.
struct ChronoPair {
  std::size_t earlier;
  std::size_t later;

  friend bool operator==(const ChronoPair&, const ChronoPair&) = default;
};

// Validated, immutable, chronologically indexed set of articles.
class Corpus {
 public:
  Corpus() = default;

  // Validates every article and synthesizes missing ids as
  // "<publisher>-<published_at>-<ordinal>". Throws InvalidArticle.
  static Corpus from_articles(std::vector<Article> articles);

  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }

  // Articles in import order.
  const std::vector<Article>& articles() const { return articles_; }

  // Import indices sorted by (published_at, id).
  const std::vector<std::size_t>& order() const { return order_; }

  // The article at a chronological position.
  const Article& chronological(std::size_t position) const {
    return articles_[order_.at(position)];
  }
  std::vector<std::string> chronological_ids() const;

  // Import index of the article with this id.
  std::optional<std::size_t> find(std::string_view id) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<Article> articles_;
  std::vector<std::size_t> order_;
  std::vector<std::string> warnings_;
};

// Parses a JSON array of article objects. All-or-nothing: throws
// MalformedInput for a bad document and InvalidArticle for the first bad
// article.
Corpus parse_article_json(std::string_view bytes);

// Serializes articles in import order using the import schema.
nlohmann::ordered_json articles_to_json(const Corpus& corpus);
std::string serialize_articles(const Corpus& corpus);

// All pairs with strictly ordered timestamps, as chronological positions,
// sorted by (earlier, later). Equal-timestamp pairs are omitted; the corpus
// already carries one warning for each of them.
std::vector<ChronoPair> chronological_pairs(const Corpus& corpus);

}  // namespace newsdeps
