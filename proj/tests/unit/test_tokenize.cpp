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
#include "newsdeps/tokenize.hpp"

using newsdeps::tokenize;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize splits on non-alphanumeric runs") {
  CHECK(tokenize("Russia's tanks, near!").tokens == Tokens{"russia", "s", "tanks", "near"});
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("  ,;--  ").tokens.empty());
  CHECK(tokenize("Ukraine-crisis 2014 Ukraine").tokens ==
        Tokens{"ukraine", "crisis", "2014", "ukraine"});
}

TEST_CASE("tokenize normalizes unicode") {
  // Decomposed "e" + combining acute becomes the precomposed letter.
  CHECK(tokenize("Cafe\xCC\x81 CAF\xC3\x89").tokens == Tokens{"caf\xC3\xA9", "caf\xC3\xA9"});
  CHECK(tokenize("\xD0\x9A\xD0\x98\xD0\x95\xD0\x92 2014").tokens ==
        Tokens{"\xD0\xBA\xD0\xB8\xD0\xB5\xD0\xB2", "2014"});
  // Typographic apostrophe and em dash are separators.
  CHECK(tokenize("Korvan\xE2\x80\x99s army\xE2\x80\x94" "again").tokens ==
        Tokens{"korvan", "s", "army", "again"});
}

TEST_CASE("tokenize keeps the source id and tolerates invalid UTF-8") {
  const auto s = tokenize("ab\xFF" "cd", "doc-1");
  CHECK(s.source_article == "doc-1");
  CHECK(s.tokens == Tokens{"ab", "cd"});
}
