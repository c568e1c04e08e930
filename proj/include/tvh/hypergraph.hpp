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

#ifndef TVH_HYPERGRAPH_HPP_
#define TVH_HYPERGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvh/types.hpp"

namespace tvh {

// A hyperedge of the time-varying hypergraph. Presence is the indicator of
// the closed interval [open, close]; crossing it takes `latency`.
struct Channel {
  ChannelId id;
  std::vector<VertexId> participants;  // ascending, no duplicates
  TimeStamp open;
  TimeStamp close;
  Duration latency;

  bool present_at(TimeStamp t) const { return open <= t && t <= close; }

  friend bool operator==(const Channel&, const Channel&) = default;
};

// Vertex set, channel multiset and observation window. Vertices are dense
// (0..vertex_count()-1); external labels live in a side table. Every vertex
// is available at all times. Immutable once built.
class TemporalHypergraph {
 public:
  TemporalHypergraph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t channel_count() const { return channels_.size(); }

  const std::vector<Channel>& channels() const { return channels_; }
  const Channel& channel(ChannelId c) const { return channels_[c.value]; }

  const std::string& label(VertexId v) const { return labels_[v.value]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_vertex(const std::string& label) const;

  const Window& window() const { return window_; }
  const std::string& time_unit() const { return time_unit_; }

  bool contains(VertexId v) const { return v.value < labels_.size(); }

  friend bool operator==(const TemporalHypergraph&,
                         const TemporalHypergraph&) = default;

 private:
  friend TemporalHypergraph build_hypergraph(
      std::span<const ChannelRecord>, Window,
      std::span<const std::string>, std::string);

  std::vector<std::string> labels_;
  std::vector<Channel> channels_;
  Window window_;
  std::string time_unit_;
};

// Builds the hypergraph from raw records.
//
// Channels whose interval lies entirely outside `window` are dropped; channels
// straddling a boundary are kept with their original times. Vertex ids are
// assigned in order of first appearance (record order, then participant
// order), followed by any labels of `vertex_universe` not seen in a kept
// channel, which become isolated vertices. Duplicate participant labels
// inside one record collapse to one vertex.
//
// Throws EmptyWindow if window.start > window.end and MalformedChannel if a
// record has open > close or no participants.
TemporalHypergraph build_hypergraph(
    std::span<const ChannelRecord> records, Window window,
    std::span<const std::string> vertex_universe = {},
    std::string time_unit = {});

}  // namespace tvh

#endif  // TVH_HYPERGRAPH_HPP_
