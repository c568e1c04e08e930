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

#ifndef TVH_TESTS_FIXTURES_HPP_
#define TVH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tvh/hypergraph.hpp"
#include "tvh/types.hpp"

namespace tvh::testing {

inline ChannelRecord record(std::string id, std::vector<std::string> who,
                            std::int64_t open, std::int64_t close,
                            std::int64_t latency = 0) {
  return ChannelRecord{std::move(id), std::move(who), TimeStamp{open},
                       TimeStamp{close}, Duration{latency}};
}

// The four-channel example hypergraph: e1={v1,v2,v3,v8}, e2={v2,v4,v9},
// e3={v3,v5,v6,v7}, e4={v4,v5,v6}, each a point event at the given time.
inline std::vector<ChannelRecord> example_records(std::int64_t e1,
                                                  std::int64_t e2,
                                                  std::int64_t e3,
                                                  std::int64_t e4) {
  return {
      record("e1", {"v1", "v2", "v3", "v8"}, e1, e1),
      record("e2", {"v2", "v4", "v9"}, e2, e2),
      record("e3", {"v3", "v5", "v6", "v7"}, e3, e3),
      record("e4", {"v4", "v5", "v6"}, e4, e4),
  };
}

inline TemporalHypergraph example_graph(std::int64_t e1, std::int64_t e2,
                                        std::int64_t e3, std::int64_t e4) {
  return build_hypergraph(example_records(e1, e2, e3, e4),
                          Window{TimeStamp{0}, TimeStamp{10}});
}

// e1 < e2 < e4 < e3: information travels v1 -> v2 -> v4 -> v6.
inline TemporalHypergraph forward_example() { return example_graph(1, 2, 4, 3); }

// e1 > e2 >= e3: nothing beyond e1's members can be reached from v1.
inline TemporalHypergraph blocked_example() { return example_graph(3, 2, 1, 2); }

inline VertexId vertex(const TemporalHypergraph& g, const std::string& label) {
  return *g.find_vertex(label);
}

struct RandomInstanceSpec {
  std::size_t vertices = 6;
  std::size_t channels = 5;
  std::size_t max_size = 4;
  std::int64_t time_max = 10;
  std::int64_t latency_max = 0;
};

// Random channel log over labels "0".."vertices-1". Every label is also
// returned as part of the vertex universe so isolated vertices exist.
inline std::vector<ChannelRecord> random_records(std::mt19937_64& rng,
                                                 const RandomInstanceSpec& s) {
  std::uniform_int_distribution<std::size_t> size_dist(
      1, std::min(s.max_size, s.vertices));
  std::uniform_int_distribution<std::size_t> vertex_dist(0, s.vertices - 1);
  std::uniform_int_distribution<std::int64_t> time_dist(0, s.time_max);
  std::uniform_int_distribution<std::int64_t> latency_dist(0, s.latency_max);
  std::vector<ChannelRecord> out;
  for (std::size_t i = 0; i < s.channels; ++i) {
    ChannelRecord r;
    r.external_id = "c" + std::to_string(i);
    const std::size_t size = size_dist(rng);
    while (r.participants.size() < size) {
      std::string label = std::to_string(vertex_dist(rng));
      if (std::find(r.participants.begin(), r.participants.end(), label) ==
          r.participants.end()) {
        r.participants.push_back(std::move(label));
      }
    }
    std::int64_t a = time_dist(rng);
    std::int64_t b = time_dist(rng);
    r.opened_at = TimeStamp{std::min(a, b)};
    r.closed_at = TimeStamp{std::max(a, b)};
    r.latency = Duration{latency_dist(rng)};
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<std::string> universe(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

inline TemporalHypergraph random_graph(std::mt19937_64& rng,
                                       const RandomInstanceSpec& s) {
  const auto records = random_records(rng, s);
  const auto labels = universe(s.vertices);
  return build_hypergraph(records, Window{TimeStamp{0}, TimeStamp{s.time_max}},
                          labels);
}

}  // namespace tvh::testing

#endif  // TVH_TESTS_FIXTURES_HPP_
