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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "newsdeps/corpus.hpp"
#include "newsdeps/measures.hpp"

namespace newsdeps {

struct MatrixEntry {
  std::size_t i;  // chronological position of the earlier article
  std::size_t j;  // chronological position of the later article
  double s;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Document-to-document similarities, stored only for strictly time-ordered
// pairs (i < j). Entries are sorted by (i, j).
struct SimilarityMatrix {
  Measure measure = Measure::kJaccard;
  bool normalized = false;
  std::vector<std::string> article_ids;  // chronological order
  std::vector<MatrixEntry> entries;

  std::size_t k() const { return article_ids.size(); }
  std::optional<double> score(std::size_t i, std::size_t j) const;

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;
};

// The text every measure sees: title, a newline, then main_text.
std::string analyzed_text(const Article& article);

// Raw scores for every pair from chronological_pairs(). Throws
// CorpusTooSmall when the corpus has fewer than two articles.
SimilarityMatrix build_d2d_matrix(const Corpus& corpus, Measure measure,
                                  const MeasureParams& params = {});

// Min-max normalization to [0, 1]. A constant matrix is returned unchanged
// (but flagged normalized). Throws EmptyMatrix.
SimilarityMatrix normalize_matrix(const SimilarityMatrix& m);

}  // namespace newsdeps
