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

#include "newsdeps/measures.hpp"

#include <algorithm>
#include <cmath>

#include "newsdeps/errors.hpp"

namespace newsdeps {
namespace {

template <typename T>
double set_overlap(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

std::vector<std::string> unique_sorted(const std::vector<std::string>& tokens) {
  std::vector<std::string> out(tokens);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::kTfidfCosine: return "tfidf_cosine";
    case Measure::kJaccard: return "jaccard";
    case Measure::kSherlock: return "sherlock";
    case Measure::kGst: return "gst";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "tfidf" || name == "tfidf_cosine") return Measure::kTfidfCosine;
  if (name == "jaccard") return Measure::kJaccard;
  if (name == "sherlock") return Measure::kSherlock;
  if (name == "gst") return Measure::kGst;
  return std::nullopt;
}

void MeasureParams::validate() const {
  if (sherlock_ngram < 1) throw InvalidConfig("sherlock_ngram must be >= 1");
  if (sherlock_zerobits < 0 || sherlock_zerobits > 16) {
    throw InvalidConfig("sherlock_zerobits must be in [0, 16]");
  }
  if (gst_min_match < 1) throw InvalidConfig("gst_min_match must be >= 1");
}

double jaccard(const TokenStream& a, const TokenStream& b) {
  return set_overlap(unique_sorted(a.tokens), unique_sorted(b.tokens));
}

TfidfIndex::TfidfIndex(std::span<const TokenStream> documents) {
  // Term ids follow lexicographic token order, so every dot product sums in
  // the same order whatever the document order.
  std::vector<std::string_view> terms;
  for (const TokenStream& doc : documents) {
    terms.insert(terms.end(), doc.tokens.begin(), doc.tokens.end());
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::unordered_map<std::string_view, std::uint32_t> vocabulary;
  vocabulary.reserve(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    vocabulary.emplace(terms[t], static_cast<std::uint32_t>(t));
  }

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> counts;
  std::vector<std::uint32_t> df(terms.size(), 0);
  counts.reserve(documents.size());
  for (const TokenStream& doc : documents) {
    std::unordered_map<std::uint32_t, std::uint32_t> tf;
    for (const std::string& token : doc.tokens) ++tf[vocabulary.at(token)];
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted(tf.begin(), tf.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [term, count] : sorted) ++df[term];
    counts.push_back(std::move(sorted));
  }

  const double k = static_cast<double>(documents.size());
  for (const auto& doc : counts) {
    std::vector<Weight> vec;
    vec.reserve(doc.size());
    double sq = 0.0;
    for (const auto& [term, count] : doc) {
      const double w = count * (1.0 + std::log(k / df[term]));
      vec.push_back({term, w});
      sq += w * w;
    }
    vectors_.push_back(std::move(vec));
    squared_norms_.push_back(sq);
  }
}

double TfidfIndex::cosine(std::size_t i, std::size_t j) const {
  if (i >= vectors_.size() || j >= vectors_.size()) {
    throw IndexOutOfRange("document index out of range");
  }
  if (squared_norms_[i] == 0.0 || squared_norms_[j] == 0.0) return 0.0;
  const auto& a = vectors_[i];
  const auto& b = vectors_[j];
  double dot = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->term < ib->term) {
      ++ia;
    } else if (ib->term < ia->term) {
      ++ib;
    } else {
      dot += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  const double c = dot / std::sqrt(squared_norms_[i] * squared_norms_[j]);
  return std::clamp(c, 0.0, 1.0);
}

double tfidf_cosine(std::span<const TokenStream> corpus_tokens, std::size_t i,
                    std::size_t j) {
  if (i >= corpus_tokens.size() || j >= corpus_tokens.size()) {
    throw IndexOutOfRange("document index out of range");
  }
  return TfidfIndex(corpus_tokens).cosine(i, j);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

SignatureSet sherlock_signatures(const TokenStream& stream,
                                 const MeasureParams& params) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.sherlock_ngram);
  const std::uint64_t mask =
      params.sherlock_zerobits == 0 ? 0 : (std::uint64_t{1} << params.sherlock_zerobits) - 1;
  SignatureSet kept;
  const auto& tokens = stream.tokens;
  if (tokens.size() < n) return kept;
  std::string window;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
    window.clear();
    for (std::size_t t = 0; t < n; ++t) {
      if (t > 0) window += ' ';
      window += tokens[start + t];
    }
    const std::uint64_t h = fnv1a64(window);
    if ((h & mask) == 0) kept.push_back(h);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

double sherlock_score(const SignatureSet& a, const SignatureSet& b) {
  return set_overlap(a, b);
}

std::vector<Tile> gst_tiles(std::span<const std::string> a,
                            std::span<const std::string> b,
                            std::size_t min_match) {
  if (min_match < 1) throw InvalidConfig("gst min_match must be >= 1");
  std::vector<Tile> tiles;
  if (a.size() < min_match || b.size() < min_match) return tiles;

  // Intern tokens so the inner loop compares integers.
  std::unordered_map<std::string_view, std::uint32_t> ids;
  auto intern = [&](std::span<const std::string> s) {
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (const auto& tok : s) {
      out.push_back(ids.try_emplace(tok, static_cast<std::uint32_t>(ids.size()))
                        .first->second);
    }
    return out;
  };
  const std::vector<std::uint32_t> ta = intern(a);
  const std::vector<std::uint32_t> tb = intern(b);
  std::vector<char> marked_a(ta.size(), 0);
  std::vector<char> marked_b(tb.size(), 0);
  std::vector<std::uint32_t> prev(tb.size() + 1);
  std::vector<std::uint32_t> cur(tb.size() + 1);

  for (;;) {
    // run[i][j]: length of the unmarked common run ending at a[i], b[j].
    // Scanning i then j ascending visits candidates of equal length in
    // (start_a, start_b) order, so a strict comparison gives the tie-break.
    std::size_t best_len = 0, best_a = 0, best_b = 0;
    std::fill(prev.begin(), prev.end(), 0);
    for (std::size_t i = 0; i < ta.size(); ++i) {
      cur[0] = 0;
      const bool free_a = !marked_a[i];
      for (std::size_t j = 0; j < tb.size(); ++j) {
        const std::uint32_t run =
            (free_a && !marked_b[j] && ta[i] == tb[j]) ? prev[j] + 1 : 0;
        cur[j + 1] = run;
        if (run > best_len) {
          best_len = run;
          best_a = i + 1 - run;
          best_b = j + 1 - run;
        }
      }
      std::swap(prev, cur);
    }
    if (best_len < min_match) break;
    std::fill_n(marked_a.begin() + static_cast<std::ptrdiff_t>(best_a), best_len, 1);
    std::fill_n(marked_b.begin() + static_cast<std::ptrdiff_t>(best_b), best_len, 1);
    tiles.push_back({best_a, best_b, best_len});
  }
  return tiles;
}

double gst_score(std::span<const Tile> tiles, std::size_t len_a,
                 std::size_t len_b) {
  if (len_a + len_b == 0) return 0.0;
  std::size_t coverage = 0;
  for (const Tile& t : tiles) coverage += t.length;
  return std::min(1.0, 2.0 * static_cast<double>(coverage) /
                           static_cast<double>(len_a + len_b));
}

}  // namespace newsdeps
