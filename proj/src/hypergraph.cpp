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

#include "tvh/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "tvh/errors.hpp"

namespace tvh {

std::optional<VertexId> TemporalHypergraph::find_vertex(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - labels_.begin())};
}

TemporalHypergraph build_hypergraph(std::span<const ChannelRecord> records,
                                    Window window,
                                    std::span<const std::string> vertex_universe,
                                    std::string time_unit) {
  if (window.start > window.end) {
    throw EmptyWindow("window start " + std::to_string(window.start.ticks) +
                      " is after window end " +
                      std::to_string(window.end.ticks));
  }

  TemporalHypergraph g;
  g.window_ = window;
  g.time_unit_ = std::move(time_unit);

  std::unordered_map<std::string, std::uint32_t> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<std::uint32_t>(g.labels_.size()));
    if (inserted) g.labels_.push_back(label);
    return VertexId{it->second};
  };

  for (const ChannelRecord& r : records) {
    if (r.opened_at > r.closed_at) {
      throw MalformedChannel("channel '" + r.external_id +
                             "' opens after it closes");
    }
    if (r.participants.empty()) {
      throw MalformedChannel("channel '" + r.external_id +
                             "' has no participants");
    }
    if (r.latency.ticks < 0) {
      throw MalformedChannel("channel '" + r.external_id +
                             "' has negative latency");
    }
    if (!window.intersects(r.opened_at, r.closed_at)) continue;

    Channel c;
    c.id = ChannelId{static_cast<std::uint32_t>(g.channels_.size())};
    c.open = r.opened_at;
    c.close = r.closed_at;
    c.latency = r.latency;
    c.participants.reserve(r.participants.size());
    for (const std::string& label : r.participants) {
      c.participants.push_back(intern(label));
    }
    std::sort(c.participants.begin(), c.participants.end());
    c.participants.erase(
        std::unique(c.participants.begin(), c.participants.end()),
        c.participants.end());
    g.channels_.push_back(std::move(c));
  }

  for (const std::string& label : vertex_universe) intern(label);
  return g;
}

}  // namespace tvh
