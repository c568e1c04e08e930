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

#ifndef TVH_SYNTH_HPP_
#define TVH_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tvh/types.hpp"

namespace tvh {

// Categorical distribution over channel sizes. weights()[k] is the
// probability of a channel with k participants; entries below 2 are zero.
class SizeDistribution {
 public:
  // Share of code reviews with more than two participants reported for the
  // Microsoft data set (33.98 %).
  static constexpr double kDefaultMultiPartyShare = 0.3398;
  static constexpr double kDefaultTailMean = 4.0;
  static constexpr std::size_t kDefaultMaxSize = 32;

  // P(2) = 1 - multi_party_share; sizes >= 3 follow a geometric tail with
  // mean `tail_mean`, truncated at `max_size` and renormalized so the tail
  // mass stays `multi_party_share`. If max_size < 3 all mass goes to size 2.
  static SizeDistribution two_plus_geometric_tail(
      double multi_party_share = kDefaultMultiPartyShare,
      double tail_mean = kDefaultTailMean,
      std::size_t max_size = kDefaultMaxSize);

  static SizeDistribution fixed(std::size_t size);

  // Explicit weights, index = size. Normalized on construction.
  explicit SizeDistribution(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t min_size() const;
  std::size_t max_size() const { return weights_.size() - 1; }
  double probability_above(std::size_t size) const;

  // Drops sizes below `size` and renormalizes.
  SizeDistribution at_least(std::size_t size) const;

 private:
  std::vector<double> weights_;
};

struct SynthParams {
  std::size_t n_vertices = 100;
  std::size_t n_channels = 500;
  Window window{TimeStamp{0}, TimeStamp{2419200}};  // four weeks in seconds
  SizeDistribution sizes = SizeDistribution::two_plus_geometric_tail();
  // Mean channel duration in ticks (geometric).
  double mean_duration = 86400.0;
  std::uint64_t rng_seed = 0;
};

// Throws InvalidParams when the size support exceeds n_vertices, the window
// is inverted, or a count or mean is out of range.
void validate(const SynthParams& params);

// Generates exactly n_channels records. Each channel's size comes from
// params.sizes; participants are drawn uniformly without replacement from
// labels "0".."n_vertices-1"; open is uniform in the window and
// close = min(open + duration, window end). Fully determined by the params.
std::vector<ChannelRecord> generate(const SynthParams& params);

}  // namespace tvh

#endif  // TVH_SYNTH_HPP_
