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
#include "newsdeps/errors.hpp"
#include "newsdeps/matrix.hpp"
#include "newsdeps/tokenize.hpp"
#include "support.hpp"

using namespace newsdeps;

namespace {

constexpr Measure kAllMeasures[] = {Measure::kTfidfCosine, Measure::kJaccard,
                                    Measure::kSherlock, Measure::kGst};

Article make_article(std::string id, std::string title, std::string text, std::int64_t t) {
  Article a;
  a.id = std::move(id);
  a.publisher = "Pub";
  a.title = std::move(title);
  a.main_text = std::move(text);
  a.published_at = Timestamp::from_unix(t);
  return a;
}

std::string words(const std::string& prefix, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += prefix + std::to_string(i) + " ";
  return out;
}

}  // namespace

TEST_CASE("build_d2d_matrix pair structure") {
  const Corpus three = Corpus::from_articles({make_article("c", "t", "x y", 300),
                                              make_article("a", "t", "x z", 100),
                                              make_article("b", "t", "y z", 200)});
  const auto m = build_d2d_matrix(three, Measure::kJaccard);
  CHECK(m.entries.size() == 3);
  CHECK(m.article_ids == std::vector<std::string>{"a", "b", "c"});
  CHECK_FALSE(m.normalized);
  for (const auto& e : m.entries) CHECK(e.i < e.j);

  const Corpus tied = Corpus::from_articles(
      {make_article("a", "t", "x", 100), make_article("b", "t", "x", 100)});
  CHECK(build_d2d_matrix(tied, Measure::kGst).entries.empty());
  CHECK(tied.warnings().size() == 1);

  const Corpus one = Corpus::from_articles({make_article("a", "t", "x", 100)});
  CHECK_THROWS_AS(build_d2d_matrix(one, Measure::kJaccard), CorpusTooSmall);
  CHECK_THROWS_AS(build_d2d_matrix(Corpus{}, Measure::kJaccard), CorpusTooSmall);
}

TEST_CASE("analyzed text includes the title") {
  const Article a = make_article("a", "Headline words", "Body.", 0);
  CHECK(tokenize(analyzed_text(a)).tokens == std::vector<std::string>{"headline", "words", "body"});
}

TEST_CASE("identical texts score 1 and disjoint texts 0 under every measure") {
  const std::string body = words("w", 60);
  const Corpus c = Corpus::from_articles({make_article("a", "Same", body, 100),
                                          make_article("b", "Same", body, 200),
                                          make_article("c", "Other", words("q", 60), 300)});
  for (const Measure m : kAllMeasures) {
    CAPTURE(measure_name(m));
    MeasureParams p;
    p.sherlock_zerobits = 0;
    const auto matrix = build_d2d_matrix(c, m, p);
    CHECK(matrix.score(0, 1) == 1.0);
    CHECK(matrix.score(0, 2) == 0.0);
    CHECK(matrix.score(1, 2) == 0.0);
  }
}

TEST_CASE("scores are symmetric: reversing publication order keeps every score") {
  const auto fig1 = parse_article_json(testing::fixture("fig1_copy_edit.json"));
  std::vector<Article> reversed = fig1.articles();
  const std::int64_t base = 2000000000;
  for (auto& a : reversed) {
    a.published_at = Timestamp::from_unix(base - a.published_at.unix_seconds());
  }
  const Corpus rev = Corpus::from_articles(reversed);
  for (const Measure m : kAllMeasures) {
    CAPTURE(measure_name(m));
    const auto fwd = build_d2d_matrix(fig1, m);
    const auto bwd = build_d2d_matrix(rev, m);
    const std::size_t k = fig1.size();
    for (const auto& e : fwd.entries) {
      // Position p in forward order is position k-1-p in reversed order.
      const auto s = bwd.score(k - 1 - e.j, k - 1 - e.i);
      REQUIRE(s);
      CHECK(*s == e.s);
    }
  }
}

TEST_CASE("copy-edit fixture: gst argmax is the copied pair") {
  const auto fig1 = parse_article_json(testing::fixture("fig1_copy_edit.json"));
  const auto m = build_d2d_matrix(fig1, Measure::kGst);
  REQUIRE(m.entries.size() == 15);
  const auto best = std::max_element(m.entries.begin(), m.entries.end(),
                                     [](const auto& a, const auto& b) { return a.s < b.s; });
  CHECK(m.article_ids[best->i] == "meridian-wire-0912");
  CHECK(m.article_ids[best->j] == "capital-markets-tv-1003");
  CHECK(best->i == 2);
  CHECK(best->j == 3);
  for (const auto& e : m.entries) {
    if (&e != &*best) CHECK(e.s < best->s);
  }
}

TEST_CASE("parallel evaluation matches direct per-pair evaluation") {
  std::mt19937_64 rng(8);
  std::vector<Article> arts;
  for (int i = 0; i < 15; ++i) {
    std::string text;
    for (int w = 0; w < 80; ++w) text += "v" + std::to_string(rng() % 30) + " ";
    arts.push_back(make_article("d" + std::to_string(i), "t", text, 1000 + i));
  }
  const Corpus c = Corpus::from_articles(arts);
  const auto m = build_d2d_matrix(c, Measure::kGst);
  REQUIRE(m.entries.size() == 105);
  for (const auto& e : m.entries) {
    const auto a = tokenize(analyzed_text(c.chronological(e.i)));
    const auto b = tokenize(analyzed_text(c.chronological(e.j)));
    CHECK(e.s == gst_score(gst_tiles(a.tokens, b.tokens, 7), a.size(), b.size()));
  }
  CHECK(build_d2d_matrix(c, Measure::kGst) == m);
}

TEST_CASE("normalize_matrix") {
  SimilarityMatrix m;
  m.article_ids = {"a", "b", "c"};
  m.entries = {{0, 1, 0.2}, {0, 2, 0.5}, {1, 2, 0.8}};
  const auto n = normalize_matrix(m);
  CHECK(n.normalized);
  CHECK(n.entries[0].s == 0.0);
  CHECK(n.entries[1].s == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(n.entries[2].s == 1.0);
  CHECK(normalize_matrix(n) == n);

  SimilarityMatrix flat = m;
  for (auto& e : flat.entries) e.s = 0.4;
  const auto nf = normalize_matrix(flat);
  CHECK(nf.normalized);
  for (const auto& e : nf.entries) CHECK(e.s == 0.4);

  SimilarityMatrix single;
  single.article_ids = {"a", "b"};
  single.entries = {{0, 1, 0.7}};
  CHECK(normalize_matrix(single).entries[0].s == 0.7);

  CHECK_THROWS_AS(normalize_matrix(SimilarityMatrix{}), EmptyMatrix);
}

TEST_CASE("normalization property: endpoints exact and idempotent") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    SimilarityMatrix m;
    const std::size_t k = 2 + rng() % 8;
    for (std::size_t i = 0; i < k; ++i) m.article_ids.push_back(std::to_string(i));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) m.entries.push_back({i, j, u(rng)});
    }
    const auto n = normalize_matrix(m);
    double lo = 2, hi = -1;
    for (const auto& e : n.entries) {
      lo = std::min(lo, e.s);
      hi = std::max(hi, e.s);
      CHECK(e.s >= 0.0);
      CHECK(e.s <= 1.0);
    }
    if (m.entries.size() > 1) {
      CHECK(lo == 0.0);
      CHECK(hi == 1.0);
    }
    CHECK(normalize_matrix(n) == n);
  }
}
