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

#ifndef TVH_ORACLE_HPP_
#define TVH_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tvh/hypergraph.hpp"
#include "tvh/reach.hpp"
#include "tvh/types.hpp"

namespace tvh {

struct JourneyStep {
  ChannelId channel;
  TimeStamp time;  // instant the channel is entered

  friend bool operator==(const JourneyStep&, const JourneyStep&) = default;
};

// A sequence of (channel, crossing time) pairs leading from `from` to `to`.
struct Journey {
  VertexId from;
  VertexId to;
  std::vector<JourneyStep> steps;
};

// Checks a journey directly against the journey definition: consecutive
// channels form a walk from `from` to `to`, every crossing happens while the
// channel is present (and, in interval mode, stays present until the
// crossing completes), and each crossing starts after the previous arrival
// (or the seed time) as the policy's strictness demands.
bool is_valid_journey(const TemporalHypergraph& graph, const Journey& journey,
                      TimeStamp seed_time, TraversalPolicy policy);

struct OracleLimits {
  std::size_t max_channels = 12;
  // Upper bound on close - open for any channel explored in interval mode,
  // since every entry instant is enumerated.
  std::int64_t max_interval_span = 4096;
  std::size_t max_states = 1u << 20;
};

struct OracleResult {
  std::map<VertexId, TimeStamp> arrivals;  // seed excluded
  std::optional<TimeStamp> seed_return;
  // One earliest journey per reached vertex.
  std::map<VertexId, Journey> witnesses;
};

// Exhaustive search over every journey that starts at `seed` at `seed_time`.
// Explores all (vertex, arrival time) states reachable by any channel at any
// admissible entry instant, without the earliest-departure shortcut the
// horizon search relies on. Meant as a test oracle for small instances.
//
// Throws UnknownVertex, or InstanceTooLarge when a limit is exceeded.
OracleResult enumerate_reachable(const TemporalHypergraph& graph,
                                 VertexId seed, TimeStamp seed_time,
                                 TraversalPolicy policy,
                                 const OracleLimits& limits = {});

}  // namespace tvh

#endif  // TVH_ORACLE_HPP_
