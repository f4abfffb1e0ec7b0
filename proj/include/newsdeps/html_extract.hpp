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

#include "newsdeps/corpus.hpp"

namespace newsdeps {

// Builds an article from a fetched HTML page using Open Graph / article meta
// tags. Resolution order per field:
//   title        og:title, else <title>
//   published_at article:published_time (required)
//   publisher    og:site_name, else the registrable domain of `url`
//   main_text    <p> text inside <article>, else every <p>; joined by blank lines
//   image_url    og:image
// The returned article has an empty id. Throws ParseFailure(field).
Article extract_from_html(std::string_view html, std::string_view url);

// Lower-cased host of an absolute URL, without userinfo or port.
std::string url_host(std::string_view url);

// Host reduced to its registrable domain ("news.example.co.uk" ->
// "example.co.uk") using a built-in list of multi-label public suffixes.
std::string registrable_domain(std::string_view host);

}  // namespace newsdeps
