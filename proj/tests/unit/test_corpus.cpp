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

#include <random>

#include "doctest.h"
#include "newsdeps/corpus.hpp"
#include "newsdeps/errors.hpp"
#include "support.hpp"

using namespace newsdeps;

namespace {

std::string article_json(const std::string& extra_fields, const std::string& when,
                         const std::string& title = "Title") {
  return R"({"publisher": "Pub", "title": ")" + title +
         R"(", "main_text": "Body text.", "published_at": ")" + when + "\"" +
         extra_fields + "}";
}

}  // namespace

TEST_CASE("parse_article_json: two complete articles are ordered by time") {
  const std::string doc = "[" +
                          article_json(R"(, "id": "late")", "2014-11-11T10:00:00Z") + "," +
                          article_json(R"(, "id": "early")", "2014-11-11T09:00:00Z") + "]";
  const Corpus c = parse_article_json(doc);
  REQUIRE(c.size() == 2);
  CHECK(c.articles()[0].id == "late");
  CHECK(c.chronological(0).id == "early");
  CHECK(c.chronological(1).id == "late");
  CHECK(c.warnings().empty());
}

TEST_CASE("parse_article_json: empty array") {
  const Corpus c = parse_article_json("[]");
  CHECK(c.size() == 0);
  CHECK(c.warnings().empty());
  CHECK(chronological_pairs(c).empty());
}

TEST_CASE("parse_article_json: equal timestamps produce one warning naming both ids") {
  const std::string doc = "[" +
                          article_json(R"(, "id": "alpha")", "2014-11-11T09:00:00Z") + "," +
                          article_json(R"(, "id": "beta")", "2014-11-11T11:00:00+02:00") +
                          "]";
  const Corpus c = parse_article_json(doc);
  REQUIRE(c.warnings().size() == 1);
  CHECK(c.warnings()[0].find("alpha") != std::string::npos);
  CHECK(c.warnings()[0].find("beta") != std::string::npos);
  CHECK(chronological_pairs(c).empty());
}

TEST_CASE("parse_article_json: malformed input") {
  CHECK_THROWS_AS(parse_article_json("{not json"), MalformedInput);
  CHECK_THROWS_AS(parse_article_json(R"({"publisher": "x"})"), MalformedInput);
  CHECK_THROWS_AS(parse_article_json("[1, 2]"), MalformedInput);
}

TEST_CASE("parse_article_json: invalid article fails the whole import") {
  auto expect = [](const std::string& doc, std::size_t index, const std::string& field) {
    try {
      (void)parse_article_json(doc);
      FAIL("expected InvalidArticle");
    } catch (const InvalidArticle& e) {
      CHECK(e.index() == index);
      CHECK(e.field() == field);
    }
  };
  const std::string good = article_json("", "2014-11-11T09:00:00Z");
  expect("[" + good + R"(, {"publisher": "P", "main_text": "x", "published_at": "2014-11-11T09:00:00Z"}])",
         1, "title");
  expect("[" + good + "," + article_json("", "2014-11-11T09:00:00Z", "   ") + "]", 1, "title");
  expect("[" + article_json("", "yesterday") + "]", 0, "published_at");
  expect("[" + article_json("", "2014-11-11T09:00:00") + "]", 0, "published_at");
  expect("[" + article_json(R"(, "color": "red")", "2014-11-11T09:00:00Z") + "]", 0, "color");
  expect("[" + article_json(R"(, "url": "/relative")", "2014-11-11T09:00:00Z") + "]", 0, "url");
  expect("[" + article_json(R"(, "id": "x")", "2014-11-11T09:00:00Z") + "," +
             article_json(R"(, "id": "x")", "2014-11-11T10:00:00Z") + "]",
         1, "id");
  expect("[" + article_json(R"(, "publisher": 3)", "2014-11-11T09:00:00Z") + "]", 0,
         "publisher");
}

TEST_CASE("missing ids are synthesized from publisher, timestamp and ordinal") {
  const std::string doc = "[" + article_json(R"(, "id": "given")", "2014-11-11T09:00:00Z") +
                          "," + article_json("", "2014-11-11T10:00:00+01:00") + "]";
  const Corpus c = parse_article_json(doc);
  CHECK(c.articles()[1].id == "Pub-2014-11-11T10:00:00+01:00-1");
}

TEST_CASE("round trip preserves unknown keys and is a fixed point") {
  const std::string doc = "[" +
                          article_json(R"(, "section": "world", "tags": ["a", {"b": 1}])",
                                       "2014-11-11T09:00:00Z") +
                          "," + article_json(R"(, "color": "#AABBCC")", "2014-11-11T08:00:00Z") +
                          "]";
  const Corpus first = parse_article_json(doc);
  const std::string once = serialize_articles(first);
  const Corpus second = parse_article_json(once);
  CHECK(serialize_articles(second) == once);
  CHECK(second.articles()[0].extra["section"] == "world");
  CHECK(second.articles()[0].extra["tags"][1]["b"] == 1);
  CHECK(second.articles()[1].color == std::optional<std::string>("#AABBCC"));

  const Corpus fig1 = parse_article_json(testing::fixture("fig1_copy_edit.json"));
  const std::string fig1_text = serialize_articles(fig1);
  CHECK(serialize_articles(parse_article_json(fig1_text)) == fig1_text);
}

TEST_CASE("lead paragraph is the first blank-line separated paragraph") {
  Article a;
  a.main_text = "\n  First line\ncontinued.  \n \n\nSecond paragraph.";
  CHECK(a.lead_paragraph() == "First line\ncontinued.");
  CHECK(split_paragraphs(a.main_text).size() == 2);
}

TEST_CASE("chronological_pairs") {
  SUBCASE("three distinct times give the full upper triangle") {
    const std::string doc = "[" + article_json("", "2014-11-11T11:00:00Z") + "," +
                            article_json("", "2014-11-11T09:00:00Z") + "," +
                            article_json("", "2014-11-11T10:00:00Z") + "]";
    const auto pairs = chronological_pairs(parse_article_json(doc));
    const std::vector<ChronoPair> expected = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(pairs == expected);
  }
  SUBCASE("four articles, two sharing a timestamp: brute-force count") {
    const std::vector<std::string> times = {"2014-11-11T09:00:00Z", "2014-11-11T10:00:00Z",
                                            "2014-11-11T10:00:00Z", "2014-11-11T12:00:00Z"};
    std::string doc = "[";
    for (std::size_t i = 0; i < times.size(); ++i) {
      doc += (i ? "," : "") + article_json("", times[i]);
    }
    doc += "]";
    const Corpus c = parse_article_json(doc);
    std::size_t brute = 0;
    for (std::size_t x = 0; x < times.size(); ++x) {
      for (std::size_t y = 0; y < times.size(); ++y) {
        if (times[x] < times[y]) ++brute;  // same format, so lexical == temporal
      }
    }
    CHECK(brute == 5);
    CHECK(chronological_pairs(c).size() == brute);
    CHECK(c.warnings().size() == 1);
  }
  SUBCASE("property: strict order and k(k-1)/2 for distinct times") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t k = 1 + rng() % 12;
      std::vector<Article> arts;
      bool distinct = true;
      std::set<std::int64_t> seen;
      for (std::size_t i = 0; i < k; ++i) {
        Article a;
        a.publisher = "P";
        a.title = "T";
        a.main_text = "M";
        const std::int64_t t = 1400000000 + static_cast<std::int64_t>(rng() % 20) * 3600;
        distinct = seen.insert(t).second && distinct;
        a.published_at = Timestamp::from_unix(t);
        arts.push_back(a);
      }
      const Corpus c = Corpus::from_articles(arts);
      const auto pairs = chronological_pairs(c);
      for (const auto& p : pairs) {
        CHECK(c.chronological(p.earlier).published_at < c.chronological(p.later).published_at);
      }
      if (distinct) CHECK(pairs.size() == k * (k - 1) / 2);
      for (std::size_t p = 1; p < k; ++p) {
        CHECK(c.chronological(p - 1).published_at <= c.chronological(p).published_at);
      }
    }
  }
}
