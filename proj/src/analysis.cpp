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

#include "newsdeps/analysis.hpp"

#include <cmath>
#include <limits>

#include "newsdeps/errors.hpp"

namespace newsdeps {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void read_number(const json& j, const char* key, double* out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number()) throw InvalidConfig(std::string(key) + " must be a number");
  *out = it->get<double>();
}

void read_int(const json& j, const char* key, int* out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number_integer()) {
    throw InvalidConfig(std::string(key) + " must be an integer");
  }
  const auto v = it->get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InvalidConfig(std::string(key) + " is out of range");
  }
  *out = static_cast<int>(v);
}

void read_bool(const json& j, const char* key, bool* out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_boolean()) throw InvalidConfig(std::string(key) + " must be a boolean");
  *out = it->get<bool>();
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw InvalidConfig(std::string(what) + " must be a JSON object");
}

ojson entries_json(const SimilarityMatrix& m, bool rounded) {
  ojson entries = ojson::array();
  for (const MatrixEntry& e : m.entries) {
    entries.push_back({{"i", e.i}, {"j", e.j}, {"s", rounded ? round_to(e.s, 9) : e.s}});
  }
  return entries;
}

ojson optional_string(const std::optional<std::string>& s) {
  return s ? ojson(*s) : ojson(nullptr);
}

}  // namespace

void AnalysisConfig::validate() const {
  params.validate();
  layout.validate();
}

SimilarityMatrix analyze_corpus(const Corpus& corpus, const AnalysisConfig& config) {
  config.validate();
  SimilarityMatrix m = build_d2d_matrix(corpus, config.measure, config.params);
  if (config.normalize && !m.entries.empty()) m = normalize_matrix(m);
  // Quantize to the exported precision so that clients re-filtering
  // "all_entries" see exactly the values the server filtered on.
  for (auto& e : m.entries) e.s = round_to(e.s, 9);
  return m;
}

double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

nlohmann::ordered_json matrix_to_json(const SimilarityMatrix& m) {
  ojson out;
  out["measure"] = measure_name(m.measure);
  out["normalized"] = m.normalized;
  out["article_ids"] = m.article_ids;
  out["entries"] = entries_json(m, true);
  return out;
}

std::string export_matrix(const SimilarityMatrix& m) {
  return matrix_to_json(m).dump(2) + "\n";
}

nlohmann::ordered_json matrix_to_record(const SimilarityMatrix& m) {
  ojson out;
  out["measure"] = measure_name(m.measure);
  out["normalized"] = m.normalized;
  out["article_ids"] = m.article_ids;
  out["entries"] = entries_json(m, false);
  return out;
}

SimilarityMatrix matrix_from_record(const nlohmann::json& j) {
  try {
    SimilarityMatrix m;
    const auto measure = parse_measure(j.at("measure").get<std::string>());
    if (!measure) throw MalformedInput("unknown measure in matrix record");
    m.measure = *measure;
    m.normalized = j.at("normalized").get<bool>();
    m.article_ids = j.at("article_ids").get<std::vector<std::string>>();
    for (const auto& e : j.at("entries")) {
      m.entries.push_back({e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(),
                           e.at("s").get<double>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad matrix record: ") + e.what());
  }
}

nlohmann::ordered_json layout_config_to_json(const LayoutConfig& c) {
  ojson out;
  out["width"] = c.width;
  out["height"] = c.height;
  out["time_axis"] = time_axis_name(c.time_axis);
  out["threshold"] = c.threshold;
  out["iterations"] = c.iterations;
  out["seed"] = c.seed;
  out["edge_width_range"] = {c.edge_min_px, c.edge_max_px};
  out["margin"] = c.margin;
  return out;
}

LayoutConfig layout_config_from_json(const nlohmann::json& j, LayoutConfig base) {
  require_object(j, "layout");
  read_number(j, "width", &base.width);
  read_number(j, "height", &base.height);
  if (const auto it = j.find("time_axis"); it != j.end()) {
    const auto axis = it->is_string() ? parse_time_axis(it->get<std::string>())
                                      : std::nullopt;
    if (!axis) throw InvalidConfig("time_axis must be \"horizontal\" or \"vertical\"");
    base.time_axis = *axis;
  }
  read_number(j, "threshold", &base.threshold);
  read_int(j, "iterations", &base.iterations);
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) {
      throw InvalidConfig("seed must be a non-negative integer");
    }
    base.seed = it->get<std::uint64_t>();
  }
  if (const auto it = j.find("edge_width_range"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
        !(*it)[1].is_number()) {
      throw InvalidConfig("edge_width_range must be [min_px, max_px]");
    }
    base.edge_min_px = (*it)[0].get<double>();
    base.edge_max_px = (*it)[1].get<double>();
  }
  read_number(j, "margin", &base.margin);
  base.validate();
  return base;
}

nlohmann::ordered_json analysis_config_to_json(const AnalysisConfig& c) {
  ojson out;
  out["measure"] = measure_name(c.measure);
  out["params"] = {{"sherlock_ngram", c.params.sherlock_ngram},
                   {"sherlock_zerobits", c.params.sherlock_zerobits},
                   {"gst_min_match", c.params.gst_min_match}};
  out["normalize"] = c.normalize;
  out["threshold"] = c.layout.threshold;
  out["layout"] = layout_config_to_json(c.layout);
  return out;
}

AnalysisConfig analysis_config_from_json(const nlohmann::json& j) {
  require_object(j, "analysis config");
  AnalysisConfig c;
  if (const auto it = j.find("measure"); it != j.end()) {
    const auto m = it->is_string() ? parse_measure(it->get<std::string>()) : std::nullopt;
    if (!m) {
      throw InvalidConfig("measure must be one of tfidf, jaccard, sherlock, gst");
    }
    c.measure = *m;
  }
  if (const auto it = j.find("params"); it != j.end()) {
    require_object(*it, "params");
    read_int(*it, "sherlock_ngram", &c.params.sherlock_ngram);
    read_int(*it, "sherlock_zerobits", &c.params.sherlock_zerobits);
    read_int(*it, "gst_min_match", &c.params.gst_min_match);
  }
  read_bool(j, "normalize", &c.normalize);
  if (const auto it = j.find("layout"); it != j.end()) {
    c.layout = layout_config_from_json(*it, c.layout);
  }
  // A top-level threshold takes precedence over layout.threshold.
  read_number(j, "threshold", &c.layout.threshold);
  c.validate();
  return c;
}

nlohmann::ordered_json layout_to_json(const TfdLayout& layout,
                                      const SimilarityMatrix& m) {
  ojson out;
  out["config"] = layout_config_to_json(layout.config);
  ojson nodes = ojson::array();
  for (const LayoutNode& n : layout.nodes) {
    ojson node;
    node["id"] = n.id;
    node["t"] = round_to(n.time_coord, 2);
    node["f"] = round_to(n.free_coord, 2);
    node["publisher"] = n.payload.publisher;
    node["title"] = n.payload.title;
    node["lead"] = n.payload.lead;
    node["image_url"] = optional_string(n.payload.image_url);
    node["color"] = optional_string(n.payload.color);
    nodes.push_back(std::move(node));
  }
  out["nodes"] = std::move(nodes);
  ojson edges = ojson::array();
  for (const LayoutEdge& e : layout.edges) {
    edges.push_back({{"i", e.i}, {"j", e.j}, {"s", round_to(e.similarity, 9)},
                     {"w", round_to(e.width_px, 2)}});
  }
  out["edges"] = std::move(edges);
  ojson ticks = ojson::array();
  for (const TimeTick& t : layout.time_ticks) {
    ticks.push_back({{"p", round_to(t.pixel, 2)}, {"label", t.label}});
  }
  out["ticks"] = std::move(ticks);
  out["all_entries"] = entries_json(m, true);
  return out;
}

std::string export_layout(const TfdLayout& layout, const SimilarityMatrix& m) {
  return layout_to_json(layout, m).dump(2) + "\n";
}

}  // namespace newsdeps
