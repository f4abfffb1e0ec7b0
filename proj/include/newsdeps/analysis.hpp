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

#include "json.hpp"
#include "newsdeps/layout.hpp"
#include "newsdeps/matrix.hpp"
#include "newsdeps/measures.hpp"

namespace newsdeps {

// Everything needed to turn a corpus into a matrix and a layout. The
// similarity threshold lives in `layout.threshold`.
struct AnalysisConfig {
  Measure measure = Measure::kGst;
  MeasureParams params;
  bool normalize = true;
  LayoutConfig layout;

  double threshold() const { return layout.threshold; }
  void validate() const;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

// Builds the d2d matrix, normalizes it when configured and rounds scores to
// 9 decimals. A matrix without entries (all timestamps equal) is returned
// unnormalized.
SimilarityMatrix analyze_corpus(const Corpus& corpus, const AnalysisConfig& config);

// Rounds to a fixed number of decimal digits, as used in exported JSON.
double round_to(double value, int digits);

// Export format: {"measure", "normalized", "article_ids", "entries"} with
// scores rounded to 9 decimals.
nlohmann::ordered_json matrix_to_json(const SimilarityMatrix& m);
std::string export_matrix(const SimilarityMatrix& m);

// Lossless form used for persistence.
nlohmann::ordered_json matrix_to_record(const SimilarityMatrix& m);
SimilarityMatrix matrix_from_record(const nlohmann::json& j);

nlohmann::ordered_json layout_config_to_json(const LayoutConfig& c);

// Applies the keys present in `j` on top of `base`, then validates.
// Throws InvalidConfig for wrong types or out-of-range values.
LayoutConfig layout_config_from_json(const nlohmann::json& j,
                                     LayoutConfig base = {});

nlohmann::ordered_json analysis_config_to_json(const AnalysisConfig& c);
AnalysisConfig analysis_config_from_json(const nlohmann::json& j);

// Layout export format including the unfiltered "all_entries" list.
// Coordinates and widths are rounded to 2 decimals, scores to 9.
nlohmann::ordered_json layout_to_json(const TfdLayout& layout,
                                      const SimilarityMatrix& m);
std::string export_layout(const TfdLayout& layout, const SimilarityMatrix& m);

}  // namespace newsdeps
