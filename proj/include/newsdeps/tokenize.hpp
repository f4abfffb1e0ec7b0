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

#include <string>
#include <string_view>
#include <vector>

namespace newsdeps {

// Normalized word tokens of one text, in source order.
struct TokenStream {
  std::vector<std::string> tokens;
  std::string source_article;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// NFC-normalizes and lower-cases `text`, then splits it on every maximal run
// of characters that are neither letters nor decimal digits. Invalid UTF-8
// sequences act as separators.
TokenStream tokenize(std::string_view text, std::string source_article = {});

}  // namespace newsdeps
