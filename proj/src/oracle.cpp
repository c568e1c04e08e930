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

#include "tvh/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "tvh/errors.hpp"

namespace tvh {

namespace {

bool contains(const Channel& c, VertexId v) {
  return std::find(c.participants.begin(), c.participants.end(), v) !=
         c.participants.end();
}

bool after(TimeStamp entry, TimeStamp previous, TraversalPolicy policy) {
  return policy.strictness == Strictness::kStrict ? entry > previous
                                                  : entry >= previous;
}

// Entry instants at which `c` may be crossed, ignoring the predecessor.
bool can_enter_at(const Channel& c, TimeStamp entry, TraversalPolicy policy) {
  if (policy.mode == PresenceMode::kPointEvent) return entry == c.close;
  return c.present_at(entry) && entry.ticks + c.latency.ticks <= c.close.ticks;
}

TimeStamp arrival_after(const Channel& c, TimeStamp entry,
                        TraversalPolicy policy) {
  if (policy.mode == PresenceMode::kPointEvent) return entry;
  return entry + c.latency;
}

struct State {
  VertexId vertex;
  TimeStamp arrival;
  // Predecessor link for witness reconstruction; npos for the seed state.
  std::size_t parent;
  ChannelId channel;
  TimeStamp entry;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

Journey reconstruct(const std::vector<State>& states, std::size_t idx) {
  Journey j;
  j.to = states[idx].vertex;
  while (states[idx].parent != kNoParent) {
    j.steps.push_back({states[idx].channel, states[idx].entry});
    idx = states[idx].parent;
  }
  j.from = states[idx].vertex;
  std::reverse(j.steps.begin(), j.steps.end());
  return j;
}

}  // namespace

bool is_valid_journey(const TemporalHypergraph& graph, const Journey& journey,
                      TimeStamp seed_time, TraversalPolicy policy) {
  if (journey.steps.empty()) return false;
  TimeStamp previous = seed_time;
  for (std::size_t i = 0; i < journey.steps.size(); ++i) {
    const JourneyStep& step = journey.steps[i];
    if (step.channel.value >= graph.channel_count()) return false;
    const Channel& c = graph.channel(step.channel);
    if (!can_enter_at(c, step.time, policy)) return false;
    if (!after(step.time, previous, policy)) return false;
    previous = arrival_after(c, step.time, policy);

    if (i == 0 && !contains(c, journey.from)) return false;
    if (i + 1 == journey.steps.size()) {
      if (!contains(c, journey.to)) return false;
    } else {
      const ChannelId next_id = journey.steps[i + 1].channel;
      if (next_id.value >= graph.channel_count()) return false;
      const Channel& next = graph.channel(next_id);
      const bool linked = std::any_of(
          c.participants.begin(), c.participants.end(),
          [&](VertexId v) { return contains(next, v); });
      if (!linked) return false;
    }
  }
  return true;
}

OracleResult enumerate_reachable(const TemporalHypergraph& graph,
                                 VertexId seed, TimeStamp seed_time,
                                 TraversalPolicy policy,
                                 const OracleLimits& limits) {
  if (!graph.contains(seed)) {
    throw UnknownVertex("vertex " + std::to_string(seed.value) +
                        " is not in the graph");
  }
  if (graph.channel_count() > limits.max_channels) {
    throw InstanceTooLarge(std::to_string(graph.channel_count()) +
                           " channels exceed the oracle limit of " +
                           std::to_string(limits.max_channels));
  }
  if (policy.mode == PresenceMode::kInterval) {
    for (const Channel& c : graph.channels()) {
      if (c.close.ticks - c.open.ticks > limits.max_interval_span) {
        throw InstanceTooLarge("channel interval too long to enumerate");
      }
    }
  }

  std::vector<State> states{{seed, seed_time, kNoParent, {}, {}}};
  // The start state is kept out of `seen` so that a journey returning to
  // the seed at seed_time still registers as a return.
  std::set<std::pair<VertexId, TimeStamp>> seen;
  std::deque<std::size_t> frontier{0};

  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    const VertexId u = states[idx].vertex;
    const TimeStamp at = states[idx].arrival;

    for (const Channel& c : graph.channels()) {
      if (!contains(c, u)) continue;
      std::vector<TimeStamp> entries;
      if (policy.mode == PresenceMode::kPointEvent) {
        entries.push_back(c.close);
      } else {
        for (auto t = c.open.ticks; t <= c.close.ticks; ++t) {
          entries.push_back(TimeStamp{t});
        }
      }
      for (TimeStamp entry : entries) {
        if (!can_enter_at(c, entry, policy) || !after(entry, at, policy)) {
          continue;
        }
        const TimeStamp arrive = arrival_after(c, entry, policy);
        for (VertexId w : c.participants) {
          if (w == u || !seen.emplace(w, arrive).second) continue;
          if (states.size() >= limits.max_states) {
            throw InstanceTooLarge("oracle state space exhausted");
          }
          states.push_back({w, arrive, idx, c.id, entry});
          frontier.push_back(states.size() - 1);
        }
      }
    }
  }

  OracleResult result;
  std::map<VertexId, std::size_t> best;
  for (std::size_t i = 1; i < states.size(); ++i) {
    const State& s = states[i];
    if (s.vertex == seed) {
      if (!result.seed_return || s.arrival < *result.seed_return) {
        result.seed_return = s.arrival;
      }
      continue;
    }
    auto [it, inserted] = best.try_emplace(s.vertex, i);
    if (!inserted && s.arrival < states[it->second].arrival) it->second = i;
  }
  for (const auto& [v, i] : best) {
    result.arrivals.emplace(v, states[i].arrival);
    result.witnesses.emplace(v, reconstruct(states, i));
  }
  return result;
}

}  // namespace tvh
