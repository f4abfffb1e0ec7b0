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

#include "newsdeps/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "newsdeps/errors.hpp"
#include "newsdeps/tokenize.hpp"

namespace newsdeps {
namespace {

// Pairs are independent; each worker writes only its own slots, so the
// result does not depend on scheduling.
template <typename Fn>
void for_each_pair(std::vector<MatrixEntry>& entries, Fn&& score) {
  const std::size_t n = entries.size();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = n < 64 ? 1 : std::min<std::size_t>(hw, 16);
  if (workers == 1) {
    for (auto& e : entries) e.s = score(e.i, e.j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx = next++; idx < n; idx = next++) {
        entries[idx].s = score(entries[idx].i, entries[idx].j);
      }
    });
  }
}

}  // namespace

std::optional<double> SimilarityMatrix::score(std::size_t i,
                                              std::size_t j) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), std::pair{i, j},
      [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
        return std::pair{e.i, e.j} < key;
      });
  if (it == entries.end() || it->i != i || it->j != j) return std::nullopt;
  return it->s;
}

std::string analyzed_text(const Article& article) {
  return article.title + "\n" + article.main_text;
}

SimilarityMatrix build_d2d_matrix(const Corpus& corpus, Measure measure,
                                  const MeasureParams& params) {
  if (corpus.size() < 2) throw CorpusTooSmall(corpus.size());
  params.validate();

  SimilarityMatrix m;
  m.measure = measure;
  m.article_ids = corpus.chronological_ids();

  std::vector<TokenStream> streams;
  streams.reserve(corpus.size());
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    const Article& a = corpus.chronological(p);
    streams.push_back(tokenize(analyzed_text(a), a.id));
  }

  for (const ChronoPair& pair : chronological_pairs(corpus)) {
    m.entries.push_back({pair.earlier, pair.later, 0.0});
  }

  switch (measure) {
    case Measure::kJaccard:
      for_each_pair(m.entries, [&](std::size_t i, std::size_t j) {
        return jaccard(streams[i], streams[j]);
      });
      break;
    case Measure::kTfidfCosine: {
      const TfidfIndex index(streams);
      for_each_pair(m.entries, [&](std::size_t i, std::size_t j) {
        return index.cosine(i, j);
      });
      break;
    }
    case Measure::kSherlock: {
      std::vector<SignatureSet> sigs;
      sigs.reserve(streams.size());
      for (const auto& s : streams) sigs.push_back(sherlock_signatures(s, params));
      for_each_pair(m.entries, [&](std::size_t i, std::size_t j) {
        return sherlock_score(sigs[i], sigs[j]);
      });
      break;
    }
    case Measure::kGst: {
      const auto min_match = static_cast<std::size_t>(params.gst_min_match);
      for_each_pair(m.entries, [&](std::size_t i, std::size_t j) {
        const auto tiles = gst_tiles(streams[i].tokens, streams[j].tokens, min_match);
        return gst_score(tiles, streams[i].size(), streams[j].size());
      });
      break;
    }
  }
  return m;
}

SimilarityMatrix normalize_matrix(const SimilarityMatrix& m) {
  if (m.entries.empty()) throw EmptyMatrix();
  SimilarityMatrix out = m;
  out.normalized = true;
  const auto [lo_it, hi_it] = std::minmax_element(
      m.entries.begin(), m.entries.end(),
      [](const MatrixEntry& a, const MatrixEntry& b) { return a.s < b.s; });
  const double lo = lo_it->s;
  const double hi = hi_it->s;
  if (!(hi > lo)) return out;
  const double span = hi - lo;
  for (auto& e : out.entries) e.s = (e.s - lo) / span;
  return out;
}

}  // namespace newsdeps
