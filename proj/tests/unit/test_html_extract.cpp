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

#include "doctest.h"
#include "newsdeps/errors.hpp"
#include "newsdeps/html_extract.hpp"

using namespace newsdeps;

namespace {

const char* kFullPage = R"(<!DOCTYPE html>
<html><head>
  <title>Fallback title | Site</title>
  <meta property="og:title" content="Tanks roll into Valdoria">
  <meta property="article:published_time" content="2014-11-11T10:03:00Z" />
  <meta content="Capital Markets TV" property="og:site_name">
  <meta property='og:image' content='https://cm.example.tv/img/t.jpg'>
  <script>var p = "<p>not text</p>";</script>
</head><body>
  <nav><p>Home | World</p></nav>
  <article class="story">
    <h1>Tanks roll into Valdoria</h1>
    <p>First &amp; foremost, the <b>column</b> moved.</p>
    <!-- <p>commented out</p> -->
    <p>Second
       paragraph.</p>
    <p>Third&#44; with &quot;quotes&quot; &#x2014; done.</p>
  </article>
  <footer><p>Copyright</p></footer>
</body></html>)";

}  // namespace

TEST_CASE("extract_from_html: all meta tags and one article element") {
  const Article a = extract_from_html(kFullPage, "https://cm.example.tv/story.html");
  CHECK(a.title == "Tanks roll into Valdoria");
  CHECK(a.publisher == "Capital Markets TV");
  CHECK(a.published_at.unix_seconds() == Timestamp::parse("2014-11-11T10:03:00Z")->unix_seconds());
  CHECK(a.image_url == std::optional<std::string>("https://cm.example.tv/img/t.jpg"));
  CHECK(a.url == std::optional<std::string>("https://cm.example.tv/story.html"));
  CHECK(a.main_text ==
        "First & foremost, the column moved.\n\nSecond paragraph.\n\n"
        "Third, with \"quotes\" \xE2\x80\x94 done.");
  CHECK(a.id.empty());
}

TEST_CASE("extract_from_html: title only, no published time") {
  try {
    (void)extract_from_html("<html><head><title>Only</title></head><body><p>x</p></body></html>",
                            "https://example.com/a");
    FAIL("expected ParseFailure");
  } catch (const ParseFailure& e) {
    CHECK(e.field() == "published_at");
  }
}

TEST_CASE("extract_from_html: fallbacks") {
  const char* page = R"(<html><head><TITLE>Plain &lt;title&gt;</TITLE>
    <meta name="article:published_time" content="2017-05-19T06:10:00+02:00"></head>
    <body><div><p>One.</p><p>Two.<br>Still two.</p></div></body></html>)";
  const Article a = extract_from_html(page, "https://news.example.co.uk/a/b");
  CHECK(a.title == "Plain <title>");
  CHECK(a.publisher == "example.co.uk");
  CHECK(a.main_text == "One.\n\nTwo. Still two.");
  CHECK_FALSE(a.image_url);
}

TEST_CASE("extract_from_html: missing body text") {
  const char* page = R"(<meta property="og:title" content="T">
    <meta property="article:published_time" content="2017-05-19T06:10:00Z">)";
  CHECK_THROWS_AS(extract_from_html(page, "https://example.com/"), ParseFailure);
}

TEST_CASE("registrable domain against a fixed public-suffix table") {
  // Expected values follow the public suffix list (publicsuffix.org).
  const std::pair<const char*, const char*> cases[] = {
      {"https://news.example.co.uk/a/b", "example.co.uk"},
      {"https://www.bbc.co.uk/news", "bbc.co.uk"},
      {"http://edition.cnn.com/2014/11/11/world", "cnn.com"},
      {"https://www.reuters.com/article/x", "reuters.com"},
      {"https://tass.com/politics/1", "tass.com"},
      {"https://www.abc.net.au/news/", "abc.net.au"},
      {"https://www3.nhk.or.jp/news/", "nhk.or.jp"},
      {"https://g1.globo.com.br/x", "globo.com.br"},
      {"https://user:pw@Sub.Example.ORG:8080/path?q=1", "example.org"},
      {"http://localhost:8000/page", "localhost"},
      {"http://127.0.0.1:9000/x", "127.0.0.1"},
      {"https://a.b.c.example.de./x", "example.de"},
  };
  for (const auto& [url, expected] : cases) {
    CAPTURE(url);
    CHECK(registrable_domain(url_host(url)) == expected);
  }
}
