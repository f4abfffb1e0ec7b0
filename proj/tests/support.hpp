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

// Test-only helpers: fixture loading and independent oracles. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef NEWSDEPS_FIXTURE_DIR
#error "NEWSDEPS_FIXTURE_DIR must be defined"
#endif

namespace newsdeps::testing {

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(NEWSDEPS_FIXTURE_DIR) / name;
}

inline std::string fixture(const std::string& name) {
  return read_text(fixture_path(name));
}

// A fresh, empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() /
             ("newsdeps-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct OracleTile {
  std::size_t a, b, len;
};

// Greedy tiling by explicit enumeration: from every pair of start positions,
// extend the unmarked match as far as it goes, keep the longest (first in
// (a, b) order on ties), mark it, repeat.
inline std::vector<OracleTile> brute_force_gst(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b,
                                               std::size_t min_match) {
  std::vector<bool> ma(a.size(), false), mb(b.size(), false);
  std::vector<OracleTile> tiles;
  for (;;) {
    OracleTile best{0, 0, 0};
    for (std::size_t sa = 0; sa < a.size(); ++sa) {
      for (std::size_t sb = 0; sb < b.size(); ++sb) {
        std::size_t len = 0;
        while (sa + len < a.size() && sb + len < b.size() && !ma[sa + len] &&
               !mb[sb + len] && a[sa + len] == b[sb + len]) {
          ++len;
        }
        if (len > best.len) best = {sa, sb, len};
      }
    }
    if (best.len < min_match || best.len == 0) break;
    for (std::size_t t = 0; t < best.len; ++t) {
      ma[best.a + t] = true;
      mb[best.b + t] = true;
    }
    tiles.push_back(best);
  }
  return tiles;
}

inline std::size_t coverage(const std::vector<OracleTile>& tiles) {
  std::size_t c = 0;
  for (const auto& t : tiles) c += t.len;
  return c;
}

// |A ∩ B| / |A ∪ B| via std::set algebra.
template <typename T>
double set_jaccard(const std::vector<T>& a, const std::vector<T>& b) {
  const std::set<T> sa(a.begin(), a.end());
  const std::set<T> sb(b.begin(), b.end());
  std::vector<T> inter, uni;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
  if (uni.empty()) return 0.0;
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

// Area of the intersection of two axis-aligned rectangles given by corners.
inline double rect_intersection(double ax0, double ay0, double ax1, double ay1,
                                double bx0, double by0, double bx1, double by1) {
  const double w = std::min(ax1, bx1) - std::max(ax0, bx0);
  const double h = std::min(ay1, by1) - std::max(ay0, by0);
  return (w > 0 && h > 0) ? w * h : 0.0;
}

// Overlap ratio of w x h boxes centred on the given points.
inline double box_overlap_ratio(const std::vector<std::pair<double, double>>& centres,
                                double w, double h) {
  double overlap = 0.0;
  for (std::size_t u = 0; u < centres.size(); ++u) {
    for (std::size_t v = u + 1; v < centres.size(); ++v) {
      const auto [ux, uy] = centres[u];
      const auto [vx, vy] = centres[v];
      overlap += rect_intersection(ux - w / 2, uy - h / 2, ux + w / 2, uy + h / 2,
                                   vx - w / 2, vy - h / 2, vx + w / 2, vy + h / 2);
    }
  }
  return centres.empty() ? 0.0 : overlap / (centres.size() * w * h);
}

// Sizes of connected components (sorted) of an undirected graph.
inline std::vector<std::size_t> component_sizes(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++sizes[find(x)];
  std::vector<std::size_t> out;
  for (const auto s : sizes) {
    if (s > 0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random token stream over a small alphabet so that repeats are common.
inline std::vector<std::string> random_stream(std::mt19937_64& rng, std::size_t max_len,
                                              int alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> tok_dist(0, alphabet - 1);
  std::vector<std::string> out(len_dist(rng));
  for (auto& t : out) t = "t" + std::to_string(tok_dist(rng));
  return out;
}

// Stopwords shared by the two-group fixture.
inline const std::set<std::string>& fixture_stopwords() {
  static const std::set<std::string> words = {
      "a", "after", "and", "as", "at", "by", "from", "in", "into", "is",
      "of", "on", "the", "to", "was", "were", "with", "his", "its"};
  return words;
}

}  // namespace newsdeps::testing
