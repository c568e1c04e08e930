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

#include "tvh/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace tvh {

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(search, v) for every vertex, spreading vertices over workers in
// fixed-size chunks. Each worker owns its HorizonSearch.
template <typename Body>
void for_each_seed(const BipartiteView& view, TraversalPolicy policy,
                   unsigned workers, Body body) {
  const std::size_t n = view.vertex_count();
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    HorizonSearch search(view, policy);
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      for (std::size_t v = begin; v < end; ++v) {
        body(search, VertexId{static_cast<std::uint32_t>(v)});
      }
    }
  };

  workers = std::min<unsigned>(
      workers, static_cast<unsigned>(std::max<std::size_t>(1, n / kChunk)));
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
}

// Point-event horizon sizes for every seed, 64 seeds per pass. Channels are
// scanned in close order; bit s of a vertex mask is set once seed s has
// informed that vertex.
std::vector<std::uint64_t> point_event_sweep(const BipartiteView& view,
                                             TraversalPolicy policy,
                                             SeedTimeRule rule,
                                             unsigned workers) {
  const std::size_t n = view.vertex_count();
  const bool strict = policy.strictness == Strictness::kStrict;
  std::vector<std::uint64_t> counts(n, 0);
  if (n == 0) return counts;

  std::vector<ChannelId> events(view.channel_count());
  for (std::size_t c = 0; c < events.size(); ++c) {
    events[c] = ChannelId{static_cast<std::uint32_t>(c)};
  }
  std::stable_sort(events.begin(), events.end(), [&](ChannelId a, ChannelId b) {
    return view.presence(a).close < view.presence(b).close;
  });
  std::vector<TimeStamp> seed_times(n);
  for (std::size_t v = 0; v < n; ++v) {
    seed_times[v] =
        seed_time_for(view, VertexId{static_cast<std::uint32_t>(v)}, rule);
  }

  constexpr std::size_t kBatch = 64;
  const std::size_t batches = (n + kBatch - 1) / kBatch;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<std::uint64_t> mask(n);
    std::vector<std::uint64_t> fire;
    std::vector<std::uint32_t> pending;
    auto member_or = [&](ChannelId c) {
      std::uint64_t bits = 0;
      for (VertexId w : view.members_of(c)) bits |= mask[w.value];
      return bits;
    };
    while (true) {
      const std::size_t batch = next.fetch_add(1);
      if (batch >= batches) return;
      const std::size_t first = batch * kBatch;
      const std::size_t last = std::min(n, first + kBatch);
      std::fill(mask.begin(), mask.end(), 0);
      pending.clear();
      for (std::size_t s = first; s < last; ++s) {
        pending.push_back(static_cast<std::uint32_t>(s));
      }
      std::sort(pending.begin(), pending.end(),
                [&](std::uint32_t a, std::uint32_t b) {
                  return seed_times[a] > seed_times[b];
                });

      for (std::size_t g = 0; g < events.size();) {
        const TimeStamp close = view.presence(events[g]).close;
        std::size_t end = g;
        while (end < events.size() &&
               view.presence(events[end]).close == close) {
          ++end;
        }
        while (!pending.empty() &&
               (strict ? seed_times[pending.back()] < close
                       : seed_times[pending.back()] <= close)) {
          const std::uint32_t s = pending.back();
          mask[s] |= std::uint64_t{1} << (s - first);
          pending.pop_back();
        }
        if (strict) {
          fire.assign(end - g, 0);
          for (std::size_t i = g; i < end; ++i) {
            fire[i - g] = member_or(events[i]);
          }
          for (std::size_t i = g; i < end; ++i) {
            if (fire[i - g] == 0) continue;
            for (VertexId w : view.members_of(events[i])) {
              mask[w.value] |= fire[i - g];
            }
          }
        } else {
          for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = g; i < end; ++i) {
              const std::uint64_t bits = member_or(events[i]);
              if (bits == 0) continue;
              for (VertexId w : view.members_of(events[i])) {
                if ((mask[w.value] | bits) != mask[w.value]) {
                  mask[w.value] |= bits;
                  changed = true;
                }
              }
            }
          }
        }
        g = end;
      }

      for (std::size_t s = first; s < last; ++s) {
        mask[s] &= ~(std::uint64_t{1} << (s - first));
      }
      std::uint64_t informed[kBatch] = {};
      for (std::uint64_t bits : mask) {
        while (bits != 0) {
          ++informed[std::countr_zero(bits)];
          bits &= bits - 1;
        }
      }
      for (std::size_t s = first; s < last; ++s) {
        counts[s] = informed[s - first];
      }
    }
  };

  workers = std::min<unsigned>(workers, static_cast<unsigned>(batches));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return counts;
}

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

DisjointSets join_channel_members(const BipartiteView& view) {
  DisjointSets sets(view.vertex_count());
  for (std::size_t c = 0; c < view.channel_count(); ++c) {
    const auto members =
        view.members_of(ChannelId{static_cast<std::uint32_t>(c)});
    for (std::size_t i = 1; i < members.size(); ++i) {
      sets.unite(members[0].value, members[i].value);
    }
  }
  return sets;
}

nlohmann::ordered_json summary_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["mean"] = round3(s.mean);
  j["median"] = s.median;
  j["min"] = s.min;
  j["max"] = s.max;
  return j;
}

std::string vertex_name(std::span<const std::string> labels, std::size_t v) {
  return labels.empty() ? std::to_string(v) : labels[v];
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void summary_row(std::ostream& out, std::string_view name, const Summary& s) {
  nlohmann::json mean = round3(s.mean);
  out << "# " << name << ',' << mean.dump() << ',' << s.median << ','
      << s.min << ',' << s.max << '\n';
}

}  // namespace

std::string_view to_string(Model model) {
  return model == Model::kTimeRespecting ? "time-respecting" : "time-ignoring";
}

std::string_view to_string(SeedTimeRule rule) {
  return rule == SeedTimeRule::kWindowStart ? "window-start"
                                            : "first-appearance";
}

double round3(double value) { return std::round(value * 1000.0) / 1000.0; }

Summary summarize(std::span<const std::uint64_t> values) {
  Summary s;
  if (values.empty()) return s;
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  long double total = 0;
  for (std::uint64_t v : sorted) total += v;
  s.mean = static_cast<double>(total / sorted.size());
  s.median = sorted[(sorted.size() - 1) / 2];
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

TimeStamp seed_time_for(const BipartiteView& view, VertexId v,
                        SeedTimeRule rule) {
  if (rule == SeedTimeRule::kWindowStart) return view.window().start;
  const auto channels = view.channels_of(v);
  if (channels.empty()) return view.window().start;
  TimeStamp first = TimeStamp::max();
  for (ChannelId c : channels) first = std::min(first, view.presence(c).open);
  return first;
}

HorizonCardinalities sweep_horizons(const BipartiteView& view, Model model,
                                    const SweepOptions& options) {
  HorizonCardinalities out;
  out.model = model;
  out.per_vertex.assign(view.vertex_count(), 0);

  if (model == Model::kTimeRespecting &&
      options.policy.mode == PresenceMode::kPointEvent) {
    out.per_vertex =
        point_event_sweep(view, options.policy, options.seed_time_rule,
                          resolve_workers(options.workers));
  } else if (model == Model::kTimeRespecting) {
    for_each_seed(view, options.policy, resolve_workers(options.workers),
                  [&](HorizonSearch& search, VertexId v) {
                    out.per_vertex[v.value] = search.run(
                        v, seed_time_for(view, v, options.seed_time_rule));
                  });
  } else {
    // One traversal per component.
    std::vector<bool> done(view.vertex_count(), false);
    for (std::size_t v = 0; v < view.vertex_count(); ++v) {
      if (done[v]) continue;
      const auto others =
          static_horizon(view, VertexId{static_cast<std::uint32_t>(v)});
      done[v] = true;
      out.per_vertex[v] = others.size();
      for (VertexId w : others) {
        done[w.value] = true;
        out.per_vertex[w.value] = others.size();
      }
    }
  }
  out.summary = summarize(out.per_vertex);
  return out;
}

ComparisonReport compare_models(const BipartiteView& view,
                                const SweepOptions& options) {
  ComparisonReport r;
  r.policy = options.policy;
  r.seed_time_rule = options.seed_time_rule;
  r.respecting = sweep_horizons(view, Model::kTimeRespecting, options);
  r.ignoring = sweep_horizons(view, Model::kTimeIgnoring, options);
  r.per_vertex_diff.resize(view.vertex_count());
  for (std::size_t v = 0; v < view.vertex_count(); ++v) {
    // Saturate rather than wrap should the subset law ever be violated.
    const auto resp = r.respecting.per_vertex[v];
    const auto ign = r.ignoring.per_vertex[v];
    r.per_vertex_diff[v] = ign >= resp ? ign - resp : 0;
  }
  r.diff_summary = summarize(r.per_vertex_diff);
  return r;
}

std::vector<std::size_t> component_sizes(const BipartiteView& view) {
  DisjointSets sets = join_channel_members(view);
  std::vector<std::size_t> sizes(view.vertex_count());
  for (std::size_t v = 0; v < sizes.size(); ++v) sizes[v] = sets.size_of(v);
  return sizes;
}

std::vector<std::pair<std::size_t, std::size_t>> largest_components(
    const BipartiteView& view) {
  DisjointSets sets = join_channel_members(view);
  std::map<std::size_t, std::size_t, std::greater<>> histogram;
  for (std::size_t v = 0; v < view.vertex_count(); ++v) {
    if (sets.find(v) == v) ++histogram[sets.size_of(v)];
  }
  return {histogram.begin(), histogram.end()};
}

void write_report_json(std::ostream& out, const ComparisonReport& report,
                       std::span<const std::string> labels) {
  nlohmann::ordered_json j;
  j["vertex_count"] = report.per_vertex_diff.size();
  j["policy"] = {{"mode", to_string(report.policy.mode)},
                 {"strictness", to_string(report.policy.strictness)}};
  j["seed_time_rule"] = to_string(report.seed_time_rule);
  j["respecting"] = summary_json(report.respecting.summary);
  j["ignoring"] = summary_json(report.ignoring.summary);
  j["diff"] = summary_json(report.diff_summary);
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < report.per_vertex_diff.size(); ++v) {
    nlohmann::ordered_json row;
    row["id"] = v;
    row["label"] = vertex_name(labels, v);
    row["respecting"] = report.respecting.per_vertex[v];
    row["ignoring"] = report.ignoring.per_vertex[v];
    row["diff"] = report.per_vertex_diff[v];
    vertices.push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const ComparisonReport& report,
                      std::span<const std::string> labels) {
  out << "vertex_id,respecting,ignoring,diff\n";
  for (std::size_t v = 0; v < report.per_vertex_diff.size(); ++v) {
    out << csv_field(vertex_name(labels, v)) << ','
        << report.respecting.per_vertex[v] << ','
        << report.ignoring.per_vertex[v] << ',' << report.per_vertex_diff[v]
        << '\n';
  }
  out << "# summary\n# series,mean,median,min,max\n";
  summary_row(out, "respecting", report.respecting.summary);
  summary_row(out, "ignoring", report.ignoring.summary);
  summary_row(out, "diff", report.diff_summary);
}

}  // namespace tvh
