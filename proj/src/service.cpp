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

#include "newsdeps/service.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "newsdeps/errors.hpp"
#include "newsdeps/html_extract.hpp"

namespace newsdeps {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  return format_utc(
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count());
}

Response json_response(int status, const ojson& body) {
  return {status, body.dump(2) + "\n"};
}

Response error_response(int status, const std::string& message, ojson detail = ojson::object()) {
  ojson body;
  body["error"] = message;
  for (const auto& [k, v] : detail.items()) body[k] = v;
  return json_response(status, body);
}

std::optional<double> parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

Response import_response(const std::string& id, const Corpus& corpus, int status,
                         const ojson& errors) {
  ojson body;
  body["corpus_id"] = id;
  body["k"] = corpus.size();
  body["warnings"] = corpus.warnings();
  if (!errors.is_null()) body["errors"] = errors;
  return json_response(status, body);
}

}  // namespace

Store::Store(fs::path root) : root_(std::move(root)), ids_(std::random_device{}()) {
  fs::create_directories(root_ / "corpora");
  fs::create_directories(root_ / "analyses");
}

bool Store::is_valid_id(std::string_view id) {
  if (id.size() != 16) return false;
  for (const char c : id) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

std::string Store::create(const fs::path& dir,
                          const std::function<std::string(const std::string&)>& render) {
  std::lock_guard lock(mutex_);
  for (;;) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(ids_()));
    const std::string id(buf);
    const fs::path final_path = dir / (id + ".json");
    if (fs::exists(final_path)) continue;
    const fs::path tmp_path = dir / (id + ".json.tmp");
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      out << render(id);
      if (!out) throw Error("cannot write " + tmp_path.string());
    }
    // A hard link never replaces an existing file, so records stay immutable.
    std::error_code ec;
    fs::create_hard_link(tmp_path, final_path, ec);
    fs::remove(tmp_path);
    if (!ec) return id;
    if (!fs::exists(final_path)) throw Error("cannot create " + final_path.string());
  }
}

std::string Store::put_corpus(const Corpus& corpus) {
  const ojson articles = articles_to_json(corpus);
  const std::string created = now_utc();
  return create(root_ / "corpora", [&](const std::string& id) {
    ojson doc;
    doc["corpus_id"] = id;
    doc["created_at"] = created;
    doc["articles"] = articles;
    return doc.dump(2) + "\n";
  });
}

std::optional<Corpus> Store::get_corpus(std::string_view id) const {
  if (!is_valid_id(id)) return std::nullopt;
  const auto text = read_file(root_ / "corpora" / (std::string(id) + ".json"));
  if (!text) return std::nullopt;
  const ojson doc = ojson::parse(*text);
  return parse_article_json(doc.at("articles").dump());
}

std::string Store::put_analysis(AnalysisRecord record) {
  record.created_at = now_utc();
  return create(root_ / "analyses", [&](const std::string& id) {
    ojson doc;
    doc["analysis_id"] = id;
    doc["corpus_id"] = record.corpus_id;
    doc["created_at"] = record.created_at;
    doc["config"] = analysis_config_to_json(record.config);
    doc["matrix"] = matrix_to_record(record.matrix);
    return doc.dump(2) + "\n";
  });
}

std::optional<AnalysisRecord> Store::get_analysis(std::string_view id) const {
  if (!is_valid_id(id)) return std::nullopt;
  const auto text = read_file(root_ / "analyses" / (std::string(id) + ".json"));
  if (!text) return std::nullopt;
  const json doc = json::parse(*text);
  AnalysisRecord record;
  record.analysis_id = doc.at("analysis_id").get<std::string>();
  record.corpus_id = doc.at("corpus_id").get<std::string>();
  record.created_at = doc.at("created_at").get<std::string>();
  record.config = analysis_config_from_json(doc.at("config"));
  record.matrix = matrix_from_record(doc.at("matrix"));
  return record;
}

Fetcher default_fetcher() {
  return [](const std::string& url) -> std::string {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw FetchFailure("not an absolute URL: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client client(origin);
    if (!client.is_valid()) throw FetchFailure("unsupported URL: " + url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(10);
    auto res = client.Get(path);
    if (!res) throw FetchFailure(url + ": " + httplib::to_string(res.error()));
    if (res->status != 200) {
      throw FetchFailure(url + ": HTTP " + std::to_string(res->status));
    }
    return res->body;
  };
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("NEWSDEPS_DATA"); env && *env) return env;
  return "newsdeps-data";
}

Service::Service(fs::path data_dir, Fetcher fetcher)
    : store_(std::move(data_dir)), fetcher_(std::move(fetcher)) {}

Response Service::import_articles(std::string_view body) {
  try {
    const Corpus corpus = parse_article_json(body);
    const std::string id = store_.put_corpus(corpus);
    return import_response(id, corpus, 201, nullptr);
  } catch (const MalformedInput& e) {
    return error_response(400, e.what());
  } catch (const InvalidArticle& e) {
    return error_response(422, e.what(), {{"index", e.index()}, {"field", e.field()}});
  }
}

Response Service::import_urls(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(400, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("urls") || !doc["urls"].is_array()) {
    return error_response(400, "expected {\"urls\": [...]}");
  }

  std::vector<Article> articles;
  ojson errors = ojson::array();
  for (const auto& item : doc["urls"]) {
    if (!item.is_string()) {
      errors.push_back({{"url", item.dump()}, {"error", "not a string"}});
      continue;
    }
    const std::string url = item.get<std::string>();
    try {
      Article a = extract_from_html(fetcher_(url), url);
      // Validate alone so one bad page cannot sink the batch.
      (void)Corpus::from_articles({a});
      articles.push_back(std::move(a));
    } catch (const Error& e) {
      errors.push_back({{"url", url}, {"error", e.what()}});
    }
  }
  if (articles.empty()) {
    return error_response(422, "no article could be imported", {{"errors", errors}});
  }
  try {
    const Corpus corpus = Corpus::from_articles(std::move(articles));
    const std::string id = store_.put_corpus(corpus);
    return import_response(id, corpus, 200, errors);
  } catch (const InvalidArticle& e) {
    return error_response(422, e.what(), {{"index", e.index()}, {"field", e.field()}});
  }
}

Response Service::get_corpus(std::string_view corpus_id) const {
  const auto corpus = store_.get_corpus(corpus_id);
  if (!corpus) return error_response(404, "unknown corpus");
  ojson body;
  body["corpus_id"] = corpus_id;
  body["k"] = corpus->size();
  body["article_ids"] = corpus->chronological_ids();
  body["warnings"] = corpus->warnings();
  body["articles"] = articles_to_json(*corpus);
  return json_response(200, body);
}

Response Service::get_article(std::string_view corpus_id,
                              std::string_view article_id) const {
  const auto corpus = store_.get_corpus(corpus_id);
  if (!corpus) return error_response(404, "unknown corpus");
  const auto index = corpus->find(article_id);
  if (!index) return error_response(404, "unknown article");
  ojson article = articles_to_json(*corpus).at(*index);
  article["lead"] = corpus->articles()[*index].lead_paragraph();
  return json_response(200, article);
}

Response Service::analyze(std::string_view corpus_id, std::string_view body) {
  const auto corpus = store_.get_corpus(corpus_id);
  if (!corpus) return error_response(404, "unknown corpus");
  AnalysisRecord record;
  record.corpus_id = std::string(corpus_id);
  try {
    const json doc = body.empty() ? json::object() : json::parse(body);
    record.config = analysis_config_from_json(doc);
  } catch (const json::parse_error& e) {
    return error_response(400, std::string("invalid JSON: ") + e.what());
  } catch (const InvalidConfig& e) {
    return error_response(422, e.what());
  }
  try {
    record.matrix = analyze_corpus(*corpus, record.config);
  } catch (const CorpusTooSmall& e) {
    return error_response(422, e.what());
  }
  const std::string id = store_.put_analysis(record);
  ojson out;
  out["analysis_id"] = id;
  out["corpus_id"] = record.corpus_id;
  out["measure"] = measure_name(record.config.measure);
  out["entries"] = record.matrix.entries.size();
  return json_response(201, out);
}

Response Service::get_matrix(std::string_view analysis_id) const {
  const auto record = store_.get_analysis(analysis_id);
  if (!record) return error_response(404, "unknown analysis");
  return {200, export_matrix(record->matrix)};
}

Response Service::get_layout(std::string_view analysis_id,
                             const LayoutOverrides& overrides) const {
  const auto record = store_.get_analysis(analysis_id);
  if (!record) return error_response(404, "unknown analysis");
  const auto corpus = store_.get_corpus(record->corpus_id);
  if (!corpus) return error_response(404, "corpus of this analysis is missing");

  LayoutConfig config = record->config.layout;
  try {
    auto number = [](const std::optional<std::string>& text, const char* name,
                     double* out) {
      if (!text) return;
      const auto v = parse_double(*text);
      if (!v) throw InvalidConfig(std::string(name) + " must be a number");
      *out = *v;
    };
    number(overrides.threshold, "threshold", &config.threshold);
    number(overrides.width, "width", &config.width);
    number(overrides.height, "height", &config.height);
    if (overrides.time_axis) {
      const auto axis = parse_time_axis(*overrides.time_axis);
      if (!axis) throw InvalidConfig("time_axis must be horizontal or vertical");
      config.time_axis = *axis;
    }
    config.validate();
  } catch (const InvalidConfig& e) {
    return error_response(422, e.what());
  }
  const TfdLayout layout = run_tfd_layout(record->matrix, *corpus, config);
  return {200, export_layout(layout, record->matrix)};
}

}  // namespace newsdeps
