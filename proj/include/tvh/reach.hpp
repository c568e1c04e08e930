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

#ifndef TVH_REACH_HPP_
#define TVH_REACH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tvh/bipartite.hpp"
#include "tvh/types.hpp"

namespace tvh {

enum class PresenceMode {
  // A channel is a single event at its close time; latency is ignored.
  kPointEvent,
  // A channel can be entered anywhere in [open, close] and must stay present
  // until the crossing (entry + latency) completes.
  kInterval,
};

enum class Strictness {
  // The next crossing must happen strictly after the previous arrival.
  kStrict,
  // The next crossing may happen at the arrival instant.
  kNonStrict,
};

struct TraversalPolicy {
  PresenceMode mode = PresenceMode::kPointEvent;
  Strictness strictness = Strictness::kStrict;

  friend bool operator==(const TraversalPolicy&,
                         const TraversalPolicy&) = default;
};

std::string_view to_string(PresenceMode mode);
std::string_view to_string(Strictness strictness);

// Time at which the other members of a channel with `presence` learn
// something that a member knew at `informed_at`, or nullopt if that member
// can no longer use the channel.
std::optional<TimeStamp> crossing_arrival(const ChannelPresence& presence,
                                          TimeStamp informed_at,
                                          TraversalPolicy policy);

struct HorizonResult {
  VertexId seed;
  TimeStamp seed_time;
  // Earliest informed time of every reached vertex. Never contains the seed.
  std::map<VertexId, TimeStamp> informed;
  // Earliest time a journey of length >= 1 leads back to the seed, if any.
  // Reported separately so the horizon stays seed-free.
  std::optional<TimeStamp> seed_return;

  std::vector<VertexId> horizon() const;
  std::size_t size() const { return informed.size(); }
  bool contains(VertexId v) const { return informed.contains(v); }
};

// Earliest-arrival search over a BipartiteView with reusable scratch state.
// One instance per thread; the view must outlive it.
//
// Label-setting search ordered by arrival time. Every crossing function is
// non-decreasing in the informed time, so the first member of a channel to be
// settled determines that channel's contribution and each channel is
// expanded at most once per run.
class HorizonSearch {
 public:
  HorizonSearch(const BipartiteView& view, TraversalPolicy policy);

  // Returns the number of informed vertices, seed excluded.
  std::size_t run(VertexId seed, TimeStamp seed_time);

  // Vertices informed by the last run, in settle order, seed excluded.
  std::span<const VertexId> informed() const { return order_; }
  bool is_informed(VertexId v) const {
    return v != seed_ && reached(v.value);
  }
  // Meaningful only for informed vertices.
  TimeStamp arrival(VertexId v) const { return TimeStamp{arrival_[v.value]}; }
  std::optional<TimeStamp> seed_return() const;

  HorizonResult result() const;

 private:
  bool reached(std::uint32_t v) const { return stamp_[v] == epoch_; }
  void next_epoch();

  const BipartiteView& view_;
  TraversalPolicy policy_;
  VertexId seed_;
  TimeStamp seed_time_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> channel_stamp_;
  std::vector<std::int64_t> arrival_;
  std::vector<VertexId> order_;
  std::vector<std::pair<std::int64_t, std::uint32_t>> heap_;
};

// Time-respecting horizon of `seed` informed at `seed_time`.
// Throws UnknownVertex if the seed is not in the view.
HorizonResult temporal_horizon(const BipartiteView& view, VertexId seed,
                               TimeStamp seed_time,
                               TraversalPolicy policy = {});

// Time-ignoring horizon: every other vertex of the seed's connected component
// in the aggregated graph, ascending. Throws UnknownVertex.
std::vector<VertexId> static_horizon(const BipartiteView& view, VertexId seed);

// True iff v is in the time-respecting horizon of u. Since the horizon never
// contains its seed, is_reachable(u, u) is always false.
bool is_reachable(const BipartiteView& view, VertexId u, VertexId v,
                  TimeStamp t, TraversalPolicy policy = {});

}  // namespace tvh

#endif  // TVH_REACH_HPP_
