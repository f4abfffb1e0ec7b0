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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "newsdeps/tokenize.hpp"

namespace newsdeps {

enum class Measure { kTfidfCosine, kJaccard, kSherlock, kGst };

// Canonical names: "tfidf_cosine", "jaccard", "sherlock", "gst".
std::string_view measure_name(Measure m);

// Accepts the canonical names plus the short alias "tfidf".
std::optional<Measure> parse_measure(std::string_view name);

struct MeasureParams {
  int sherlock_ngram = 3;
  int sherlock_zerobits = 3;
  int gst_min_match = 7;

  // Throws InvalidConfig when a value is out of range.
  void validate() const;

  friend bool operator==(const MeasureParams&, const MeasureParams&) = default;
};

// |A ∩ B| / |A ∪ B| over token sets; 0 when both are empty.
double jaccard(const TokenStream& a, const TokenStream& b);

// TF-IDF vectors for a fixed document collection: tf is the raw term count
// and idf = 1 + ln(k / df).
class TfidfIndex {
 public:
  explicit TfidfIndex(std::span<const TokenStream> documents);

  std::size_t size() const { return vectors_.size(); }

  // Cosine of documents i and j in [0, 1]; 0 if either vector is zero.
  // Throws IndexOutOfRange.
  double cosine(std::size_t i, std::size_t j) const;

 private:
  struct Weight {
    std::uint32_t term;
    double value;
  };
  std::vector<std::vector<Weight>> vectors_;  // sorted by term id
  std::vector<double> squared_norms_;
};

// One-shot form of TfidfIndex::cosine.
double tfidf_cosine(std::span<const TokenStream> corpus_tokens, std::size_t i,
                    std::size_t j);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

// Sorted, duplicate-free set of n-gram hashes.
using SignatureSet = std::vector<std::uint64_t>;

// Hashes every window of `sherlock_ngram` tokens (joined by one space) and
// keeps those whose `sherlock_zerobits` lowest bits are zero.
SignatureSet sherlock_signatures(const TokenStream& stream,
                                 const MeasureParams& params);

// Jaccard overlap of two signature sets; 0 when both are empty.
double sherlock_score(const SignatureSet& a, const SignatureSet& b);

struct Tile {
  std::size_t start_a;
  std::size_t start_b;
  std::size_t length;

  friend bool operator==(const Tile&, const Tile&) = default;
};

// Greedy String Tiling. Repeatedly takes the longest common run of unmarked
// tokens (ties: smallest start_a, then smallest start_b), marks it in both
// streams, and stops once no run of at least `min_match` tokens is left.
// Tiles are returned in the order they were found.
std::vector<Tile> gst_tiles(std::span<const std::string> a,
                            std::span<const std::string> b,
                            std::size_t min_match);

// 2 * coverage / (len_a + len_b); 0 when both lengths are 0.
double gst_score(std::span<const Tile> tiles, std::size_t len_a,
                 std::size_t len_b);

}  // namespace newsdeps
