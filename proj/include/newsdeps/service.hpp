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

#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "newsdeps/analysis.hpp"
#include "newsdeps/corpus.hpp"

namespace newsdeps {

struct AnalysisRecord {
  std::string analysis_id;
  std::string corpus_id;
  AnalysisConfig config;
  SimilarityMatrix matrix;
  std::string created_at;
};

// One JSON document per corpus and per analysis under a data directory.
// Records are never overwritten; ids are 16 lowercase hex digits.
class Store {
 public:
  explicit Store(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::string put_corpus(const Corpus& corpus);
  std::optional<Corpus> get_corpus(std::string_view id) const;

  // Assigns record.analysis_id and created_at, then persists it.
  std::string put_analysis(AnalysisRecord record);
  std::optional<AnalysisRecord> get_analysis(std::string_view id) const;

  static bool is_valid_id(std::string_view id);

 private:
  // Writes render(id) under a fresh id without ever replacing a file.
  std::string create(const std::filesystem::path& dir,
                     const std::function<std::string(const std::string&)>& render);

  std::filesystem::path root_;
  std::mutex mutex_;
  std::mt19937_64 ids_;
};

// Returns the body of a URL or throws FetchFailure.
using Fetcher = std::function<std::string(const std::string& url)>;

// HTTP(S) GET with redirects, 10 s timeouts.
Fetcher default_fetcher();

struct Response {
  int status = 200;
  std::string body;
};

struct LayoutOverrides {
  std::optional<std::string> threshold;
  std::optional<std::string> time_axis;
  std::optional<std::string> width;
  std::optional<std::string> height;
};

// Request handlers, independent of the HTTP transport. Every handler returns
// a JSON body; failures carry {"error": ...} plus detail fields.
class Service {
 public:
  explicit Service(std::filesystem::path data_dir, Fetcher fetcher = default_fetcher());

  Response import_articles(std::string_view body);
  Response import_urls(std::string_view body);
  Response get_corpus(std::string_view corpus_id) const;
  Response get_article(std::string_view corpus_id, std::string_view article_id) const;
  Response analyze(std::string_view corpus_id, std::string_view body);
  Response get_matrix(std::string_view analysis_id) const;
  Response get_layout(std::string_view analysis_id, const LayoutOverrides& overrides) const;

  Store& store() { return store_; }

 private:
  mutable Store store_;
  Fetcher fetcher_;
};

// Default data directory: $NEWSDEPS_DATA, else "./newsdeps-data".
std::filesystem::path default_data_dir();

}  // namespace newsdeps
