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

#include <map>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "tvh/bipartite.hpp"
#include "tvh/errors.hpp"
#include "tvh/oracle.hpp"
#include "tvh/reach.hpp"

namespace tvh {
namespace {

using testing::record;
using testing::vertex;

std::map<std::string, std::int64_t> by_label(const TemporalHypergraph& g,
                                             const HorizonResult& r) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [v, t] : r.informed) out[g.label(v)] = t.ticks;
  return out;
}

std::set<std::string> labels_of(const TemporalHypergraph& g,
                                const std::vector<VertexId>& vs) {
  std::set<std::string> out;
  for (VertexId v : vs) out.insert(g.label(v));
  return out;
}

constexpr TraversalPolicy kPointStrict{PresenceMode::kPointEvent,
                                       Strictness::kStrict};
constexpr TraversalPolicy kPointLoose{PresenceMode::kPointEvent,
                                      Strictness::kNonStrict};
constexpr TraversalPolicy kIntervalStrict{PresenceMode::kInterval,
                                          Strictness::kStrict};
constexpr TraversalPolicy kIntervalLoose{PresenceMode::kInterval,
                                         Strictness::kNonStrict};

TEST(TemporalHorizon, ForwardExampleArrivalTimes) {
  const auto g = testing::forward_example();
  const auto view = to_bipartite(g);
  const auto r = temporal_horizon(view, vertex(g, "v1"), TimeStamp{0});
  const std::map<std::string, std::int64_t> expected{
      {"v2", 1}, {"v3", 1}, {"v8", 1}, {"v4", 2},
      {"v9", 2}, {"v5", 3}, {"v6", 3}, {"v7", 4}};
  EXPECT_EQ(by_label(g, r), expected);
  EXPECT_FALSE(r.seed_return.has_value());
}

TEST(TemporalHorizon, ForwardExampleDiffusionPathIsV1V2V4V6) {
  const auto g = testing::forward_example();
  const auto oracle = enumerate_reachable(g, vertex(g, "v1"), TimeStamp{0},
                                          kPointStrict);
  const Journey& j = oracle.witnesses.at(vertex(g, "v6"));
  ASSERT_EQ(j.steps.size(), 3u);
  // e1, e2, e4 at times 1, 2, 3.
  EXPECT_EQ(j.steps[0], (JourneyStep{ChannelId{0}, TimeStamp{1}}));
  EXPECT_EQ(j.steps[1], (JourneyStep{ChannelId{1}, TimeStamp{2}}));
  EXPECT_EQ(j.steps[2], (JourneyStep{ChannelId{3}, TimeStamp{3}}));
  EXPECT_TRUE(is_valid_journey(g, j, TimeStamp{0}, kPointStrict));
}

TEST(TemporalHorizon, BlockedExampleStopsAfterFirstChannel) {
  const auto g = testing::blocked_example();
  const auto view = to_bipartite(g);
  const auto r = temporal_horizon(view, vertex(g, "v1"), TimeStamp{0});
  const std::map<std::string, std::int64_t> expected{
      {"v2", 3}, {"v3", 3}, {"v8", 3}};
  EXPECT_EQ(by_label(g, r), expected);
  EXPECT_FALSE(r.contains(vertex(g, "v6")));
}

TEST(TemporalHorizon, IsolatedSeed) {
  const std::vector<std::string> universe{"a", "lonely"};
  const auto g =
      build_hypergraph(std::vector{record("c", {"a"}, 0, 1)},
                       Window{TimeStamp{0}, TimeStamp{1}}, universe);
  const auto view = to_bipartite(g);
  EXPECT_TRUE(
      temporal_horizon(view, vertex(g, "lonely"), TimeStamp{0}).informed.empty());
  EXPECT_TRUE(
      temporal_horizon(view, vertex(g, "a"), TimeStamp{0}).informed.empty());
}

TEST(TemporalHorizon, UnknownSeedThrows) {
  const auto view = to_bipartite(testing::forward_example());
  EXPECT_THROW(temporal_horizon(view, VertexId{9}, TimeStamp{0}),
               UnknownVertex);
  EXPECT_THROW(static_horizon(view, VertexId{100}), UnknownVertex);
  EXPECT_THROW(is_reachable(view, VertexId{0}, VertexId{9}, TimeStamp{0}),
               UnknownVertex);
}

TEST(TemporalHorizon, StrictnessAtEqualTimes) {
  // Two point events at the same instant chained through b.
  const std::vector<ChannelRecord> records{record("x", {"a", "b"}, 5, 5),
                                           record("y", {"b", "c"}, 5, 5)};
  const auto g = build_hypergraph(records, Window{TimeStamp{0}, TimeStamp{9}});
  const auto view = to_bipartite(g);
  const VertexId a = vertex(g, "a");
  EXPECT_EQ(temporal_horizon(view, a, TimeStamp{0}, kPointStrict).size(), 1u);
  EXPECT_EQ(temporal_horizon(view, a, TimeStamp{0}, kPointLoose).size(), 2u);
  // Informed exactly at the event time.
  EXPECT_EQ(temporal_horizon(view, a, TimeStamp{5}, kPointStrict).size(), 0u);
  EXPECT_EQ(temporal_horizon(view, a, TimeStamp{5}, kPointLoose).size(), 2u);
}

TEST(TemporalHorizon, IntervalModeLatency) {
  const auto g = build_hypergraph(
      std::vector{record("x", {"a", "b"}, 0, 10, 3),
                  record("slow", {"b", "c"}, 0, 10, 11)},
      Window{TimeStamp{0}, TimeStamp{10}});
  const auto view = to_bipartite(g);
  const VertexId a = vertex(g, "a");
  const VertexId b = vertex(g, "b");
  // Strict: enter at 1 (after the seed time 0), arrive at 4.
  auto r = temporal_horizon(view, a, TimeStamp{0}, kIntervalStrict);
  EXPECT_EQ(r.informed, (std::map<VertexId, TimeStamp>{{b, TimeStamp{4}}}));
  r = temporal_horizon(view, a, TimeStamp{0}, kIntervalLoose);
  EXPECT_EQ(r.informed, (std::map<VertexId, TimeStamp>{{b, TimeStamp{3}}}));
  // Too late to finish the crossing before the channel closes.
  EXPECT_TRUE(
      temporal_horizon(view, a, TimeStamp{7}, kIntervalStrict).informed.empty());
  EXPECT_EQ(temporal_horizon(view, a, TimeStamp{7}, kIntervalLoose).size(), 1u);
}

TEST(TemporalHorizon, IntervalModeWaitsForOpen) {
  const auto g = build_hypergraph(std::vector{record("x", {"a", "b"}, 6, 8)},
                                  Window{TimeStamp{0}, TimeStamp{10}});
  const auto r = temporal_horizon(to_bipartite(g), vertex(g, "a"),
                                  TimeStamp{0}, kIntervalStrict);
  EXPECT_EQ(r.informed.at(vertex(g, "b")), TimeStamp{6});
}

TEST(TemporalHorizon, SeedReturnIsReportedSeparately) {
  const std::vector<ChannelRecord> records{record("x", {"s", "m"}, 1, 1),
                                           record("y", {"m", "s"}, 2, 2)};
  const auto g = build_hypergraph(records, Window{TimeStamp{0}, TimeStamp{5}});
  const auto view = to_bipartite(g);
  const auto r = temporal_horizon(view, vertex(g, "s"), TimeStamp{0});
  EXPECT_EQ(r.size(), 1u);
  EXPECT_FALSE(r.contains(vertex(g, "s")));
  ASSERT_TRUE(r.seed_return.has_value());
  EXPECT_EQ(*r.seed_return, TimeStamp{2});
  EXPECT_FALSE(is_reachable(view, vertex(g, "s"), vertex(g, "s"), TimeStamp{0}));
}

TEST(StaticHorizon, Basics) {
  const auto g = testing::forward_example();
  const auto view = to_bipartite(g);
  EXPECT_EQ(labels_of(g, static_horizon(view, vertex(g, "v6"))),
            (std::set<std::string>{"v1", "v2", "v3", "v4", "v5", "v7", "v8",
                                   "v9"}));

  const std::vector<std::string> universe{"alone"};
  const auto pair = build_hypergraph(std::vector{record("c", {"a", "b"}, 0, 0)},
                                     Window{TimeStamp{0}, TimeStamp{0}},
                                     universe);
  const auto pview = to_bipartite(pair);
  EXPECT_EQ(labels_of(pair, static_horizon(pview, vertex(pair, "a"))),
            (std::set<std::string>{"b"}));
  EXPECT_TRUE(static_horizon(pview, vertex(pair, "alone")).empty());
}

TEST(IsReachable, Asymmetry) {
  const auto g = testing::forward_example();
  const auto view = to_bipartite(g);
  EXPECT_TRUE(is_reachable(view, vertex(g, "v1"), vertex(g, "v6"), TimeStamp{0}));
  EXPECT_FALSE(
      is_reachable(view, vertex(g, "v6"), vertex(g, "v1"), TimeStamp{0}));
  EXPECT_FALSE(
      is_reachable(view, vertex(g, "v1"), vertex(g, "v1"), TimeStamp{0}));
}

// Property checks over random instances.

TEST(TemporalHorizonProperties, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(2024);
  const TraversalPolicy policies[] = {kPointStrict, kPointLoose,
                                      kIntervalStrict, kIntervalLoose};
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(
        rng, {.vertices = 6, .channels = 5, .max_size = 4, .time_max = 10,
              .latency_max = trial % 2 == 0 ? 0 : 3});
    const auto view = to_bipartite(g);
    for (const TraversalPolicy& policy : policies) {
      for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        const TimeStamp t{static_cast<std::int64_t>(rng() % 6)};
        const auto fast = temporal_horizon(view, VertexId{s}, t, policy);
        const auto slow = enumerate_reachable(g, VertexId{s}, t, policy);
        ASSERT_EQ(fast.informed, slow.arrivals) << "trial " << trial;
        ASSERT_EQ(fast.seed_return, slow.seed_return) << "trial " << trial;
      }
    }
  }
}

TEST(TemporalHorizonProperties, SubsetOfStaticHorizon) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(
        rng, {.vertices = 40, .channels = 60, .max_size = 5, .time_max = 30});
    const auto view = to_bipartite(g);
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
      const auto stat = static_horizon(view, VertexId{s});
      const std::set<VertexId> allowed(stat.begin(), stat.end());
      for (VertexId v :
           temporal_horizon(view, VertexId{s}, TimeStamp{0}).horizon()) {
        ASSERT_TRUE(allowed.contains(v));
      }
    }
  }
}

TEST(TemporalHorizonProperties, StaticHorizonIsSymmetric) {
  std::mt19937_64 rng(81);
  const auto g = testing::random_graph(
      rng, {.vertices = 50, .channels = 30, .max_size = 3, .time_max = 30});
  const auto view = to_bipartite(g);
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : static_horizon(view, VertexId{u})) {
      const auto back = static_horizon(view, v);
      EXPECT_TRUE(std::binary_search(back.begin(), back.end(), VertexId{u}));
    }
  }
}

TEST(TemporalHorizonProperties, SimultaneousEventsReduceToStaticConnectivity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto records = testing::random_records(
        rng, {.vertices = 30, .channels = 25, .max_size = 4, .time_max = 10});
    for (auto& r : records) r.opened_at = r.closed_at = TimeStamp{5};
    const auto g = build_hypergraph(records, Window{TimeStamp{0}, TimeStamp{10}});
    const auto view = to_bipartite(g);
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
      EXPECT_EQ(
          temporal_horizon(view, VertexId{s}, TimeStamp{5}, kPointLoose)
              .horizon(),
          static_horizon(view, VertexId{s}));
    }
  }
}

TEST(HorizonSearch, ReusableAcrossSeeds) {
  std::mt19937_64 rng(4);
  const auto g = testing::random_graph(
      rng, {.vertices = 30, .channels = 50, .max_size = 4, .time_max = 20});
  const auto view = to_bipartite(g);
  HorizonSearch search(view, kIntervalStrict);
  for (int round = 0; round < 2; ++round) {
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
      search.run(VertexId{s}, TimeStamp{2});
      const auto fresh =
          temporal_horizon(view, VertexId{s}, TimeStamp{2}, kIntervalStrict);
      EXPECT_EQ(search.result().informed, fresh.informed);
    }
  }
}

}  // namespace
}  // namespace tvh
