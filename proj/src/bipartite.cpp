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

#include "tvh/bipartite.hpp"

#include <algorithm>

namespace tvh {

BipartiteView::BipartiteView(const TemporalHypergraph& graph)
    : window_(graph.window()) {
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.channel_count();

  channel_offsets_.assign(m + 1, 0);
  presence_.reserve(m);
  std::vector<std::size_t> degree(n, 0);
  for (const Channel& c : graph.channels()) {
    channel_offsets_[c.id.value + 1] = c.participants.size();
    presence_.push_back({c.open, c.close, c.latency});
    for (VertexId v : c.participants) ++degree[v.value];
  }
  for (std::size_t i = 0; i < m; ++i) {
    channel_offsets_[i + 1] += channel_offsets_[i];
  }
  members_.reserve(channel_offsets_[m]);
  for (const Channel& c : graph.channels()) {
    members_.insert(members_.end(), c.participants.begin(),
                    c.participants.end());
  }

  vertex_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v];
  }
  incident_.resize(members_.size());
  std::vector<std::size_t> cursor(vertex_offsets_.begin(),
                                  vertex_offsets_.end() - 1);
  for (const Channel& c : graph.channels()) {
    for (VertexId v : c.participants) incident_[cursor[v.value]++] = c.id;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(incident_.begin() + vertex_offsets_[v],
              incident_.begin() + vertex_offsets_[v + 1],
              [&](ChannelId a, ChannelId b) {
                const auto ca = presence_[a.value].close;
                const auto cb = presence_[b.value].close;
                return ca != cb ? ca < cb : a < b;
              });
  }
}

}  // namespace tvh
