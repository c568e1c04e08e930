// Copyright 2026 The tvh Authors.
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

#ifndef TVH_ANALYSIS_HPP_
#define TVH_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvh/bipartite.hpp"
#include "tvh/reach.hpp"
#include "tvh/types.hpp"

namespace tvh {

enum class Model { kTimeRespecting, kTimeIgnoring };

// When each seed starts spreading in an all-seeds sweep.
enum class SeedTimeRule {
  // Every seed starts at the window start.
  kWindowStart,
  // A seed starts when its earliest channel opens (window start if isolated).
  kFirstAppearance,
};

std::string_view to_string(Model model);
std::string_view to_string(SeedTimeRule rule);

// Location statistics of a count sample. The median is the lower median for
// even sample sizes, so it is always one of the observed values.
struct Summary {
  double mean = 0.0;
  std::uint64_t median = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary summarize(std::span<const std::uint64_t> values);

struct HorizonCardinalities {
  Model model = Model::kTimeRespecting;
  std::vector<std::uint64_t> per_vertex;  // indexed by VertexId
  Summary summary;
};

struct SweepOptions {
  TraversalPolicy policy;
  SeedTimeRule seed_time_rule = SeedTimeRule::kWindowStart;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

TimeStamp seed_time_for(const BipartiteView& view, VertexId v,
                        SeedTimeRule rule);

// Horizon cardinality of every vertex under one model. Results do not depend
// on the worker count.
HorizonCardinalities sweep_horizons(const BipartiteView& view, Model model,
                                    const SweepOptions& options = {});

struct ComparisonReport {
  TraversalPolicy policy;
  SeedTimeRule seed_time_rule = SeedTimeRule::kWindowStart;
  HorizonCardinalities respecting;
  HorizonCardinalities ignoring;
  std::vector<std::uint64_t> per_vertex_diff;  // ignoring - respecting
  Summary diff_summary;
};

ComparisonReport compare_models(const BipartiteView& view,
                                const SweepOptions& options = {});

// Connected components of the aggregated graph as (size, how many) pairs,
// largest size first. Isolated vertices count as components of size 1.
std::vector<std::pair<std::size_t, std::size_t>> largest_components(
    const BipartiteView& view);

// Component size of every vertex, from a union-find pass over channels.
std::vector<std::size_t> component_sizes(const BipartiteView& view);

// Report export. `labels` maps VertexId to external label; when empty the
// dense ids are written instead. Means are rounded to 3 decimals.
//
// JSON layout:
//   {"vertex_count": N,
//    "policy": {"mode": "point", "strictness": "strict"},
//    "seed_time_rule": "window-start",
//    "respecting": {"mean": .., "median": .., "min": .., "max": ..},
//    "ignoring": {...}, "diff": {...},
//    "vertices": [{"id": 0, "label": "a", "respecting": 1, "ignoring": 1,
//                  "diff": 0}, ...]}
//
// CSV layout: header `vertex_id,respecting,ignoring,diff`, one row per
// vertex in id order (vertex_id is the label), then a trailer block
//   # summary
//   # series,mean,median,min,max
//   # respecting,...
//   # ignoring,...
//   # diff,...
void write_report_json(std::ostream& out, const ComparisonReport& report,
                       std::span<const std::string> labels = {});
void write_report_csv(std::ostream& out, const ComparisonReport& report,
                      std::span<const std::string> labels = {});

double round3(double value);

}  // namespace tvh

#endif  // TVH_ANALYSIS_HPP_
