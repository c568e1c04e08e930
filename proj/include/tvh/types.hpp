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

#ifndef TVH_TYPES_HPP_
#define TVH_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace tvh {

// Non-negative number of discrete time units.
struct Duration {
  std::int64_t ticks = 0;

  friend constexpr auto operator<=>(Duration, Duration) = default;
};

// A point on the discrete time axis. The unit (seconds, days, ...) is carried
// by the graph as metadata, not by the value.
struct TimeStamp {
  std::int64_t ticks = 0;

  static constexpr TimeStamp min() {
    return {std::numeric_limits<std::int64_t>::min()};
  }
  static constexpr TimeStamp max() {
    return {std::numeric_limits<std::int64_t>::max()};
  }

  friend constexpr auto operator<=>(TimeStamp, TimeStamp) = default;
  friend constexpr TimeStamp operator+(TimeStamp t, Duration d) {
    return {t.ticks + d.ticks};
  }
};

inline std::ostream& operator<<(std::ostream& os, TimeStamp t) {
  return os << t.ticks;
}

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << 'v' << v.value;
}

struct ChannelId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(ChannelId, ChannelId) = default;
};

// Closed observation interval [start, end].
struct Window {
  TimeStamp start;
  TimeStamp end;

  bool contains(TimeStamp t) const { return start <= t && t <= end; }
  // True iff [open, close] and the window share at least one instant.
  bool intersects(TimeStamp open, TimeStamp close) const {
    return open <= end && close >= start;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

// One communication channel as it appears in an event log: participants are
// external labels, not yet densified.
struct ChannelRecord {
  std::string external_id;
  std::vector<std::string> participants;
  TimeStamp opened_at;
  TimeStamp closed_at;
  Duration latency;

  friend bool operator==(const ChannelRecord&, const ChannelRecord&) = default;
};

}  // namespace tvh

template <>
struct std::hash<tvh::VertexId> {
  std::size_t operator()(tvh::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

#endif  // TVH_TYPES_HPP_
