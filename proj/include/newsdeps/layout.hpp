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
#include <string>
#include <string_view>
#include <vector>

#include "newsdeps/corpus.hpp"
#include "newsdeps/matrix.hpp"

namespace newsdeps {

enum class TimeAxis { kHorizontal, kVertical };

std::string_view time_axis_name(TimeAxis axis);
std::optional<TimeAxis> parse_time_axis(std::string_view name);

struct LayoutConfig {
  double width = 1000.0;
  double height = 1000.0;
  TimeAxis time_axis = TimeAxis::kHorizontal;
  double threshold = 0.1;
  int iterations = 500;
  std::uint64_t seed = 42;
  double edge_min_px = 0.5;
  double edge_max_px = 8.0;
  double margin = 40.0;

  // Throws InvalidConfig.
  void validate() const;

  // Viewport extent along the time axis and along the free axis.
  double time_extent() const;
  double free_extent() const;

  friend bool operator==(const LayoutConfig&, const LayoutConfig&) = default;
};

enum class Lod { kNone, kSource, kTitle, kDetailed };

std::string_view lod_name(Lod lod);

struct LabelBox {
  double width;
  double height;
};

// Fixed label footprint estimate per level of detail.
LabelBox label_box(Lod lod);

struct LodPayload {
  std::string publisher;
  std::string title;
  std::string lead;
  std::optional<std::string> image_url;
  std::optional<std::string> color;
};

struct LayoutNode {
  std::string id;
  double time_coord;
  double free_coord;
  LodPayload payload;
};

struct LayoutEdge {
  std::size_t i;  // earlier, chronological position
  std::size_t j;  // later
  double similarity;
  double width_px;
};

struct TimeTick {
  double pixel;
  std::string label;
};

// Projection of a node onto each screen axis.
struct AxisIndication {
  double x_axis;
  double y_axis;
};

// Temporal-force-directed graph. Nodes are in chronological order.
struct TfdLayout {
  LayoutConfig config;
  double k_fr = 0.0;
  std::vector<LayoutNode> nodes;
  std::vector<LayoutEdge> edges;
  std::vector<TimeTick> time_ticks;
  std::vector<AxisIndication> axis_indications;

  // Screen coordinates, which depend on the time axis orientation.
  double x(std::size_t n) const;
  double y(std::size_t n) const;
};

// Affine map of publication times onto [margin, extent - margin] of the time
// axis, per chronological position. A zero time span maps to the midpoint.
std::vector<double> time_axis_map(const Corpus& corpus,
                                  const LayoutConfig& config);

// Entries with s >= threshold, in (i, j) order.
std::vector<MatrixEntry> filter_edges(const SimilarityMatrix& m,
                                      double threshold);

// Maps [threshold, 1] affinely onto [min_px, max_px].
double edge_width(double s, double threshold, double min_px, double max_px);

// Ideal FR edge length sqrt(width * height / k).
double fr_constant(std::size_t k, const LayoutConfig& config);

// Layout state before the first force iteration.
TfdLayout initial_layout(const SimilarityMatrix& m, const Corpus& corpus,
                         const LayoutConfig& config);

// Pins the time coordinate and runs Fruchterman-Reingold on the free axis.
// Deterministic for fixed inputs. Throws MismatchedIds, InvalidConfig.
TfdLayout run_tfd_layout(const SimilarityMatrix& m, const Corpus& corpus,
                         const LayoutConfig& config);

// E = sum over retained edges of s*d^3/(3 k_fr) + sum over node pairs of
// k_fr^3/d, with d the 2-D distance (floored at 1e-6).
double layout_energy(const TfdLayout& layout, const SimilarityMatrix& m,
                     double k_fr);

// Total pairwise label-box overlap divided by total label-box area, with
// boxes centred on the nodes' screen positions for the given orientation.
double lod_overlap_ratio(const TfdLayout& layout, Lod lod, TimeAxis axis);

// Most detailed LOD whose overlap ratio stays below 0.10.
Lod auto_lod(const TfdLayout& layout, const LayoutConfig& config);

}  // namespace newsdeps
