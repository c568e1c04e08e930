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

#include "tvh/reach.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tvh/errors.hpp"

namespace tvh {

namespace {

void require_vertex(const BipartiteView& view, VertexId v) {
  if (!view.contains(v)) {
    throw UnknownVertex("vertex " + std::to_string(v.value) +
                        " is not in the graph");
  }
}

}  // namespace

std::string_view to_string(PresenceMode mode) {
  return mode == PresenceMode::kPointEvent ? "point" : "interval";
}

std::string_view to_string(Strictness strictness) {
  return strictness == Strictness::kStrict ? "strict" : "non-strict";
}

std::optional<TimeStamp> crossing_arrival(const ChannelPresence& presence,
                                          TimeStamp informed_at,
                                          TraversalPolicy policy) {
  const bool strict = policy.strictness == Strictness::kStrict;
  const std::int64_t t = informed_at.ticks;
  const std::int64_t close = presence.close.ticks;

  if (policy.mode == PresenceMode::kPointEvent) {
    if (strict ? t < close : t <= close) return presence.close;
    return std::nullopt;
  }

  // Integer time: "strictly after t" starts at t + 1.
  std::int64_t earliest = t;
  if (strict && __builtin_add_overflow(t, 1, &earliest)) return std::nullopt;
  const std::int64_t depart = std::max(earliest, presence.open.ticks);
  std::int64_t arrive = 0;
  if (__builtin_add_overflow(depart, presence.latency.ticks, &arrive)) {
    return std::nullopt;
  }
  if (arrive > close) return std::nullopt;
  return TimeStamp{arrive};
}

std::vector<VertexId> HorizonResult::horizon() const {
  std::vector<VertexId> out;
  out.reserve(informed.size());
  for (const auto& [v, t] : informed) out.push_back(v);
  return out;
}

HorizonSearch::HorizonSearch(const BipartiteView& view, TraversalPolicy policy)
    : view_(view),
      policy_(policy),
      stamp_(view.vertex_count(), 0),
      channel_stamp_(view.channel_count(), 0),
      arrival_(view.vertex_count(), 0) {}

void HorizonSearch::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    std::fill(channel_stamp_.begin(), channel_stamp_.end(), 0);
    epoch_ = 1;
  }
}

std::size_t HorizonSearch::run(VertexId seed, TimeStamp seed_time) {
  require_vertex(view_, seed);
  next_epoch();
  seed_ = seed;
  seed_time_ = seed_time;
  order_.clear();
  heap_.clear();

  const bool strict = policy_.strictness == Strictness::kStrict;
  using Entry = std::pair<std::int64_t, std::uint32_t>;
  const auto later = std::greater<Entry>{};

  stamp_[seed.value] = epoch_;
  arrival_[seed.value] = seed_time.ticks;
  heap_.emplace_back(seed_time.ticks, seed.value);

  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), later);
    const auto [t, u] = heap_.back();
    heap_.pop_back();
    if (t != arrival_[u]) continue;  // stale entry
    if (u != seed.value) order_.push_back(VertexId{u});

    // Channels that closed before (strict: at or before) t are unusable.
    const auto incident = view_.channels_of(VertexId{u});
    const auto first = std::partition_point(
        incident.begin(), incident.end(), [&](ChannelId c) {
          const auto close = view_.presence(c).close.ticks;
          return strict ? close <= t : close < t;
        });
    for (auto it = first; it != incident.end(); ++it) {
      const ChannelId c = *it;
      if (channel_stamp_[c.value] == epoch_) continue;
      channel_stamp_[c.value] = epoch_;
      const auto arrive =
          crossing_arrival(view_.presence(c), TimeStamp{t}, policy_);
      if (!arrive) continue;
      for (VertexId w : view_.members_of(c)) {
        if (w.value == u) continue;
        if (reached(w.value) && arrival_[w.value] <= arrive->ticks) continue;
        stamp_[w.value] = epoch_;
        arrival_[w.value] = arrive->ticks;
        heap_.emplace_back(arrive->ticks, w.value);
        std::push_heap(heap_.begin(), heap_.end(), later);
      }
    }
  }
  return order_.size();
}

std::optional<TimeStamp> HorizonSearch::seed_return() const {
  // The last hop of any returning journey leaves from some informed member of
  // a channel the seed belongs to; leaving at that member's earliest time is
  // never worse.
  std::optional<TimeStamp> best;
  for (ChannelId c : view_.channels_of(seed_)) {
    for (VertexId w : view_.members_of(c)) {
      if (w == seed_ || !reached(w.value)) continue;
      const auto arrive =
          crossing_arrival(view_.presence(c), arrival(w), policy_);
      if (arrive && (!best || *arrive < *best)) best = arrive;
    }
  }
  return best;
}

HorizonResult HorizonSearch::result() const {
  HorizonResult r;
  r.seed = seed_;
  r.seed_time = seed_time_;
  for (VertexId v : order_) r.informed.emplace(v, arrival(v));
  r.seed_return = seed_return();
  return r;
}

HorizonResult temporal_horizon(const BipartiteView& view, VertexId seed,
                               TimeStamp seed_time, TraversalPolicy policy) {
  require_vertex(view, seed);
  HorizonSearch search(view, policy);
  search.run(seed, seed_time);
  return search.result();
}

std::vector<VertexId> static_horizon(const BipartiteView& view,
                                     VertexId seed) {
  require_vertex(view, seed);
  std::vector<bool> seen(view.vertex_count(), false);
  std::vector<bool> expanded(view.channel_count(), false);
  std::vector<VertexId> stack{seed};
  std::vector<VertexId> out;
  seen[seed.value] = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (ChannelId c : view.channels_of(u)) {
      if (expanded[c.value]) continue;
      expanded[c.value] = true;
      for (VertexId w : view.members_of(c)) {
        if (seen[w.value]) continue;
        seen[w.value] = true;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reachable(const BipartiteView& view, VertexId u, VertexId v,
                  TimeStamp t, TraversalPolicy policy) {
  require_vertex(view, u);
  require_vertex(view, v);
  if (u == v) return false;
  HorizonSearch search(view, policy);
  search.run(u, t);
  return search.is_informed(v);
}

}  // namespace tvh
