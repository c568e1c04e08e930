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

#ifndef TVH_BIPARTITE_HPP_
#define TVH_BIPARTITE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tvh/hypergraph.hpp"
#include "tvh/types.hpp"

namespace tvh {

struct ChannelPresence {
  TimeStamp open;
  TimeStamp close;
  Duration latency;

  friend bool operator==(const ChannelPresence&,
                         const ChannelPresence&) = default;
};

// Bipartite form of a TemporalHypergraph: vertices on the left, channels on
// the right, an edge (v, c) for every participation. Both directions are
// stored as compressed adjacency arrays.
//
// channels_of(v) is ordered by (close, channel id) so that traversals can
// skip channels that closed before a vertex was informed. members_of(c) is
// ascending by vertex id.
class BipartiteView {
 public:
  BipartiteView() = default;
  explicit BipartiteView(const TemporalHypergraph& graph);

  std::size_t vertex_count() const { return vertex_offsets_.size() - 1; }
  std::size_t channel_count() const { return channel_offsets_.size() - 1; }
  std::size_t edge_count() const { return members_.size(); }

  std::span<const VertexId> members_of(ChannelId c) const {
    return {members_.data() + channel_offsets_[c.value],
            members_.data() + channel_offsets_[c.value + 1]};
  }
  std::span<const ChannelId> channels_of(VertexId v) const {
    return {incident_.data() + vertex_offsets_[v.value],
            incident_.data() + vertex_offsets_[v.value + 1]};
  }
  const ChannelPresence& presence(ChannelId c) const {
    return presence_[c.value];
  }

  bool contains(VertexId v) const { return v.value < vertex_count(); }
  const Window& window() const { return window_; }

 private:
  Window window_;
  std::vector<std::size_t> channel_offsets_{0};
  std::vector<VertexId> members_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<ChannelId> incident_;
  std::vector<ChannelPresence> presence_;
};

inline BipartiteView to_bipartite(const TemporalHypergraph& graph) {
  return BipartiteView(graph);
}

}  // namespace tvh

#endif  // TVH_BIPARTITE_HPP_
