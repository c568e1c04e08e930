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

#include "tvh/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "tvh/errors.hpp"

namespace tvh {

SizeDistribution::SizeDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 3) weights_.resize(3, 0.0);
  weights_[0] = weights_[1] = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidParams("size weights must be finite and non-negative");
    }
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (total <= 0.0) throw InvalidParams("size distribution has no mass");
  for (double& w : weights_) w /= total;
  while (weights_.size() > 3 && weights_.back() == 0.0) weights_.pop_back();
}

SizeDistribution SizeDistribution::two_plus_geometric_tail(
    double multi_party_share, double tail_mean, std::size_t max_size) {
  if (!(multi_party_share >= 0.0 && multi_party_share <= 1.0)) {
    throw InvalidParams("multi-party share must lie in [0, 1]");
  }
  if (!(tail_mean >= 3.0)) {
    throw InvalidParams("mean size of multi-party channels must be >= 3");
  }
  std::vector<double> w(std::max<std::size_t>(max_size, 2) + 1, 0.0);
  w[2] = 1.0 - multi_party_share;
  if (max_size >= 3 && multi_party_share > 0.0) {
    // size = 3 + G with G ~ Geometric(q) on {0, 1, ...}, E[G] = tail_mean - 3.
    const double q = 1.0 / (tail_mean - 2.0);
    double tail = 0.0;
    for (std::size_t k = 3; k <= max_size; ++k) {
      w[k] = q * std::pow(1.0 - q, static_cast<double>(k - 3));
      tail += w[k];
    }
    for (std::size_t k = 3; k <= max_size; ++k) {
      w[k] *= multi_party_share / tail;
    }
  } else {
    w[2] = 1.0;
  }
  return SizeDistribution(std::move(w));
}

SizeDistribution SizeDistribution::fixed(std::size_t size) {
  if (size < 2) throw InvalidParams("channel size must be at least 2");
  std::vector<double> w(size + 1, 0.0);
  w[size] = 1.0;
  return SizeDistribution(std::move(w));
}

std::size_t SizeDistribution::min_size() const {
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] > 0.0) return k;
  }
  return weights_.size();
}

double SizeDistribution::probability_above(std::size_t size) const {
  double p = 0.0;
  for (std::size_t k = size + 1; k < weights_.size(); ++k) p += weights_[k];
  return p;
}

SizeDistribution SizeDistribution::at_least(std::size_t size) const {
  std::vector<double> w = weights_;
  for (std::size_t k = 0; k < std::min(size, w.size()); ++k) w[k] = 0.0;
  return SizeDistribution(std::move(w));
}

void validate(const SynthParams& params) {
  if (params.n_vertices == 0) throw InvalidParams("n_vertices must be > 0");
  if (params.n_channels == 0) throw InvalidParams("n_channels must be > 0");
  if (params.window.start > params.window.end) {
    throw InvalidParams("window start is after window end");
  }
  if (!(params.mean_duration >= 0.0) || !std::isfinite(params.mean_duration)) {
    throw InvalidParams("mean duration must be finite and non-negative");
  }
  if (params.sizes.max_size() > params.n_vertices) {
    throw InvalidParams("channel sizes up to " +
                        std::to_string(params.sizes.max_size()) +
                        " need at least that many vertices, got " +
                        std::to_string(params.n_vertices));
  }
}

std::vector<ChannelRecord> generate(const SynthParams& params) {
  validate(params);

  std::mt19937_64 rng(params.rng_seed);
  const auto& weights = params.sizes.weights();
  std::discrete_distribution<std::size_t> size_dist(weights.begin(),
                                                    weights.end());
  std::uniform_int_distribution<std::int64_t> open_dist(
      params.window.start.ticks, params.window.end.ticks);
  std::uniform_int_distribution<std::uint32_t> vertex_dist(
      0, static_cast<std::uint32_t>(params.n_vertices - 1));
  // Geometric on {0, 1, ...} with the requested mean.
  std::geometric_distribution<std::int64_t> duration_dist(
      1.0 / (params.mean_duration + 1.0));

  std::vector<ChannelRecord> records;
  records.reserve(params.n_channels);
  std::vector<std::uint32_t> picked;
  for (std::size_t i = 0; i < params.n_channels; ++i) {
    const std::size_t size = size_dist(rng);
    picked.clear();
    if (size * 2 > params.n_vertices) {
      // Dense case: partial Fisher-Yates over the whole universe.
      std::vector<std::uint32_t> all(params.n_vertices);
      std::iota(all.begin(), all.end(), 0u);
      for (std::size_t k = 0; k < size; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, all.size() - 1);
        std::swap(all[k], all[pick(rng)]);
        picked.push_back(all[k]);
      }
    } else {
      while (picked.size() < size) {
        const std::uint32_t v = vertex_dist(rng);
        if (std::find(picked.begin(), picked.end(), v) == picked.end()) {
          picked.push_back(v);
        }
      }
    }

    ChannelRecord r;
    r.external_id = "c" + std::to_string(i);
    r.participants.reserve(size);
    for (std::uint32_t v : picked) r.participants.push_back(std::to_string(v));
    r.opened_at = TimeStamp{open_dist(rng)};
    const std::int64_t duration = duration_dist(rng);
    r.closed_at = TimeStamp{
        duration >= params.window.end.ticks - r.opened_at.ticks
            ? params.window.end.ticks
            : r.opened_at.ticks + duration};
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace tvh
