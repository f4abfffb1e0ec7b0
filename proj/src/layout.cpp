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

#include "newsdeps/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "newsdeps/errors.hpp"

namespace newsdeps {
namespace {

constexpr double kMinDistance = 1e-6;
constexpr double kLodOverlapLimit = 0.10;

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct TimeScale {
  std::int64_t t0;
  std::int64_t t1;
  double lo;
  double hi;

  double operator()(std::int64_t t) const {
    if (t1 == t0) return (lo + hi) / 2.0;
    return lo + static_cast<double>(t - t0) / static_cast<double>(t1 - t0) * (hi - lo);
  }
};

TimeScale make_scale(const Corpus& corpus, const LayoutConfig& config) {
  const double lo = config.margin;
  const double hi = config.time_extent() - config.margin;
  if (corpus.empty()) return {0, 0, lo, hi};
  return {corpus.chronological(0).published_at.unix_seconds(),
          corpus.chronological(corpus.size() - 1).published_at.unix_seconds(),
          lo, hi};
}

std::vector<TimeTick> make_ticks(const TimeScale& scale) {
  std::vector<TimeTick> ticks;
  if (scale.t1 == scale.t0) {
    ticks.push_back({scale(scale.t0), format_utc(scale.t0)});
    return ticks;
  }
  static constexpr std::array<std::int64_t, 22> kSteps = {
      1,      5,      15,      30,      60,       300,      900,    1800,
      3600,   7200,   10800,   21600,   43200,    86400,    172800, 604800,
      1209600, 2592000, 7776000, 15768000, 31536000, 315360000};
  const std::int64_t span = scale.t1 - scale.t0;
  std::int64_t step = kSteps.back();
  for (const std::int64_t s : kSteps) {
    if (span / s <= 8) {
      step = s;
      break;
    }
  }
  // First multiple of step at or after t0.
  std::int64_t first = scale.t0 / step * step;
  if (first < scale.t0) first += step;
  for (std::int64_t t = first; t <= scale.t1; t += step) {
    std::string label = format_utc(t);
    if (step % 86400 == 0) {
      label = label.substr(0, 10);
    } else if (step % 60 == 0) {
      label = label.substr(0, 10) + " " + label.substr(11, 5);
    } else {
      label = label.substr(0, 10) + " " + label.substr(11, 8);
    }
    ticks.push_back({scale(t), std::move(label)});
  }
  return ticks;
}

double overlap_1d(double a_center, double b_center, double extent) {
  return std::max(0.0, extent - std::abs(a_center - b_center));
}

}  // namespace

std::string_view time_axis_name(TimeAxis axis) {
  return axis == TimeAxis::kHorizontal ? "horizontal" : "vertical";
}

std::optional<TimeAxis> parse_time_axis(std::string_view name) {
  if (name == "horizontal") return TimeAxis::kHorizontal;
  if (name == "vertical") return TimeAxis::kVertical;
  return std::nullopt;
}

void LayoutConfig::validate() const {
  if (!std::isfinite(width) || !std::isfinite(height) || !std::isfinite(margin) ||
      margin < 0.0) {
    throw InvalidConfig("width, height and margin must be finite, margin >= 0");
  }
  if (!(width > 2.0 * margin) || !(height > 2.0 * margin)) {
    throw InvalidConfig("width and height must exceed twice the margin");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw InvalidConfig("threshold must be in [0, 1]");
  }
  if (iterations < 1) throw InvalidConfig("iterations must be >= 1");
  if (!std::isfinite(edge_min_px) || !std::isfinite(edge_max_px) ||
      !(edge_min_px < edge_max_px)) {
    throw InvalidConfig("edge width range must satisfy min < max");
  }
}

double LayoutConfig::time_extent() const {
  return time_axis == TimeAxis::kHorizontal ? width : height;
}

double LayoutConfig::free_extent() const {
  return time_axis == TimeAxis::kHorizontal ? height : width;
}

std::string_view lod_name(Lod lod) {
  switch (lod) {
    case Lod::kNone: return "none";
    case Lod::kSource: return "source";
    case Lod::kTitle: return "title";
    case Lod::kDetailed: return "detailed";
  }
  return "none";
}

LabelBox label_box(Lod lod) {
  switch (lod) {
    case Lod::kNone: return {8.0, 8.0};
    case Lod::kSource: return {80.0, 16.0};
    case Lod::kTitle: return {160.0, 32.0};
    case Lod::kDetailed: return {240.0, 120.0};
  }
  return {8.0, 8.0};
}

double TfdLayout::x(std::size_t n) const {
  const LayoutNode& node = nodes.at(n);
  return config.time_axis == TimeAxis::kHorizontal ? node.time_coord : node.free_coord;
}

double TfdLayout::y(std::size_t n) const {
  const LayoutNode& node = nodes.at(n);
  return config.time_axis == TimeAxis::kHorizontal ? node.free_coord : node.time_coord;
}

std::vector<double> time_axis_map(const Corpus& corpus,
                                  const LayoutConfig& config) {
  const TimeScale scale = make_scale(corpus, config);
  std::vector<double> coords;
  coords.reserve(corpus.size());
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    coords.push_back(scale(corpus.chronological(p).published_at.unix_seconds()));
  }
  return coords;
}

std::vector<MatrixEntry> filter_edges(const SimilarityMatrix& m,
                                      double threshold) {
  std::vector<MatrixEntry> kept;
  for (const MatrixEntry& e : m.entries) {
    if (e.s >= threshold) kept.push_back(e);
  }
  return kept;
}

double edge_width(double s, double threshold, double min_px, double max_px) {
  if (threshold >= 1.0) return max_px;
  return min_px + (s - threshold) / (1.0 - threshold) * (max_px - min_px);
}

double fr_constant(std::size_t k, const LayoutConfig& config) {
  return std::sqrt(config.width * config.height / static_cast<double>(std::max<std::size_t>(k, 1)));
}

TfdLayout initial_layout(const SimilarityMatrix& m, const Corpus& corpus,
                         const LayoutConfig& config) {
  config.validate();
  if (m.article_ids != corpus.chronological_ids()) {
    throw MismatchedIds("matrix article ids do not match the corpus");
  }
  const std::size_t k = corpus.size();

  TfdLayout layout;
  layout.config = config;
  layout.k_fr = fr_constant(k, config);

  const TimeScale scale = make_scale(corpus, config);
  const double free_lo = config.margin;
  const double free_hi = config.free_extent() - config.margin;
  std::mt19937_64 rng(config.seed);
  layout.nodes.reserve(k);
  for (std::size_t p = 0; p < k; ++p) {
    const Article& a = corpus.chronological(p);
    const double free = k == 1 ? (free_lo + free_hi) / 2.0
                               : free_lo + unit_uniform(rng) * (free_hi - free_lo);
    layout.nodes.push_back(
        {a.id, scale(a.published_at.unix_seconds()), free,
         {a.publisher, a.title, a.lead_paragraph(), a.image_url, a.color}});
  }

  for (const MatrixEntry& e : filter_edges(m, config.threshold)) {
    layout.edges.push_back(
        {e.i, e.j, e.s,
         edge_width(e.s, config.threshold, config.edge_min_px, config.edge_max_px)});
  }
  layout.time_ticks = make_ticks(scale);
  for (std::size_t n = 0; n < k; ++n) {
    layout.axis_indications.push_back({layout.x(n), layout.y(n)});
  }
  return layout;
}

TfdLayout run_tfd_layout(const SimilarityMatrix& m, const Corpus& corpus,
                         const LayoutConfig& config) {
  TfdLayout layout = initial_layout(m, corpus, config);
  const std::size_t k = layout.nodes.size();
  if (k < 2) return layout;

  const double kfr = layout.k_fr;
  const double kfr2 = kfr * kfr;
  const double free_lo = config.margin;
  const double free_hi = config.free_extent() - config.margin;
  const double t_start = 0.1 * config.free_extent();

  std::vector<double> t(k), f(k), disp(k);
  for (std::size_t n = 0; n < k; ++n) {
    t[n] = layout.nodes[n].time_coord;
    f[n] = layout.nodes[n].free_coord;
  }
  std::mt19937_64 jitter(config.seed ^ 0x9e3779b97f4a7c15ULL);

  // Free-axis offset and 2-D distance from v to u; coincident nodes get a
  // seeded 1e-6 nudge along the free axis.
  auto separation = [&](std::size_t u, std::size_t v, double* df, double* d) {
    const double dt = t[u] - t[v];
    *df = f[u] - f[v];
    *d = std::hypot(dt, *df);
    if (*d < kMinDistance) {
      *df = (jitter() & 1) ? kMinDistance : -kMinDistance;
      *d = std::hypot(dt, *df);
    }
  };

  for (int it = 0; it < config.iterations; ++it) {
    const double temperature =
        t_start * (1.0 - static_cast<double>(it) / config.iterations);
    std::fill(disp.begin(), disp.end(), 0.0);

    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = u + 1; v < k; ++v) {
        double df = 0.0, d = 0.0;
        separation(u, v, &df, &d);
        const double push = (df / d) * (kfr2 / d);
        disp[u] += push;
        disp[v] -= push;
      }
    }
    for (const LayoutEdge& e : layout.edges) {
      double df = 0.0, d = 0.0;
      separation(e.j, e.i, &df, &d);
      const double pull = (df / d) * (e.similarity * d * d / kfr);
      disp[e.j] -= pull;
      disp[e.i] += pull;
    }
    for (std::size_t n = 0; n < k; ++n) {
      const double step = std::clamp(disp[n], -temperature, temperature);
      f[n] = std::clamp(f[n] + step, free_lo, free_hi);
    }
  }

  for (std::size_t n = 0; n < k; ++n) layout.nodes[n].free_coord = f[n];
  for (std::size_t n = 0; n < k; ++n) {
    layout.axis_indications[n] = {layout.x(n), layout.y(n)};
  }
  return layout;
}

double layout_energy(const TfdLayout& layout, const SimilarityMatrix& m,
                     double k_fr) {
  const auto& nodes = layout.nodes;
  auto distance = [&](std::size_t u, std::size_t v) {
    const double d = std::hypot(nodes[u].time_coord - nodes[v].time_coord,
                                nodes[u].free_coord - nodes[v].free_coord);
    return std::max(d, kMinDistance);
  };
  double energy = 0.0;
  for (const MatrixEntry& e : filter_edges(m, layout.config.threshold)) {
    if (e.i >= nodes.size() || e.j >= nodes.size()) {
      throw MismatchedIds("matrix entry outside the layout");
    }
    const double d = distance(e.i, e.j);
    energy += e.s * d * d * d / (3.0 * k_fr);
  }
  const double k3 = k_fr * k_fr * k_fr;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (std::size_t v = u + 1; v < nodes.size(); ++v) {
      energy += k3 / distance(u, v);
    }
  }
  return energy;
}

double lod_overlap_ratio(const TfdLayout& layout, Lod lod, TimeAxis axis) {
  const std::size_t k = layout.nodes.size();
  if (k == 0) return 0.0;
  const LabelBox box = label_box(lod);
  auto screen = [&](std::size_t n) {
    const LayoutNode& node = layout.nodes[n];
    return axis == TimeAxis::kHorizontal
               ? std::pair{node.time_coord, node.free_coord}
               : std::pair{node.free_coord, node.time_coord};
  };
  double overlap = 0.0;
  for (std::size_t u = 0; u < k; ++u) {
    const auto [ux, uy] = screen(u);
    for (std::size_t v = u + 1; v < k; ++v) {
      const auto [vx, vy] = screen(v);
      overlap += overlap_1d(ux, vx, box.width) * overlap_1d(uy, vy, box.height);
    }
  }
  return overlap / (static_cast<double>(k) * box.width * box.height);
}

Lod auto_lod(const TfdLayout& layout, const LayoutConfig& config) {
  for (const Lod lod : {Lod::kDetailed, Lod::kTitle, Lod::kSource}) {
    if (lod_overlap_ratio(layout, lod, config.time_axis) < kLodOverlapLimit) {
      return lod;
    }
  }
  return Lod::kNone;
}

}  // namespace newsdeps
