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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvh/analysis.hpp"
#include "tvh/bipartite.hpp"
#include "tvh/errors.hpp"
#include "tvh/hypergraph.hpp"
#include "tvh/ingest.hpp"
#include "tvh/reach.hpp"
#include "tvh/synth.hpp"

namespace tvh::cli {

namespace {

using nlohmann::ordered_json;

// Raised for configuration problems detected after flag parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SynthFlags {
  std::optional<std::size_t> vertices;
  std::size_t channels = 500;
  std::uint64_t rng_seed = 0;
  std::size_t min_size = 2;
  std::optional<std::size_t> max_size;
  double multi_share = SizeDistribution::kDefaultMultiPartyShare;
  double tail_mean = SizeDistribution::kDefaultTailMean;
  double mean_duration = 86400.0;
};

// Everything a run needs: where channels come from, the window, the
// traversal policy and how to report.
struct RunConfig {
  std::optional<std::string> input;
  std::optional<std::string> input_format;
  SynthFlags synth;
  std::optional<std::int64_t> window_start;
  std::optional<std::int64_t> window_end;
  std::optional<std::string> deny_list;
  std::size_t min_participants = 1;

  std::string mode = "point";
  bool strict = false;
  bool non_strict = false;
  std::string seed_time_rule = "window-start";
  unsigned workers = 0;

  std::optional<std::string> out;
  std::optional<std::string> format;

  // horizon
  std::string seed;
  std::optional<std::int64_t> seed_time;
  std::string model = "respecting";
};

void add_synth_flags(CLI::App* cmd, SynthFlags& s) {
  cmd->add_option("--vertices", s.vertices, "Number of vertices");
  cmd->add_option("--channels", s.channels, "Number of channels");
  cmd->add_option("--rng-seed", s.rng_seed, "Generator seed");
  cmd->add_option("--min-size", s.min_size, "Smallest channel size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-size", s.max_size,
                  "Largest channel size (default: min(32, vertices))");
  cmd->add_option("--multi-share", s.multi_share,
                  "Share of channels with more than two participants");
  cmd->add_option("--tail-mean", s.tail_mean,
                  "Mean size of multi-party channels");
  cmd->add_option("--mean-duration", s.mean_duration,
                  "Mean channel duration in ticks");
}

void add_window_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--window-start", c.window_start, "Observation window start");
  cmd->add_option("--window-end", c.window_end, "Observation window end");
}

void add_input_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--input", c.input, "Channel log (JSONL or CSV)");
  cmd->add_option("--input-format", c.input_format,
                  "Input format (default: from extension)")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_option("--deny-list", c.deny_list,
                  "File of participant labels to drop, one per line");
  cmd->add_option("--min-participants", c.min_participants,
                  "Drop channels with fewer participants after filtering");
  add_window_flags(cmd, c);
}

void add_policy_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--mode", c.mode, "Channel presence: point or interval")
      ->check(CLI::IsMember({"point", "interval"}));
  auto* strict = cmd->add_flag("--strict", c.strict,
                               "Next crossing strictly after arrival (default)");
  cmd->add_flag("--non-strict", c.non_strict,
                "Next crossing may happen at the arrival instant")
      ->excludes(strict);
}

TraversalPolicy policy_of(const RunConfig& c) {
  TraversalPolicy p;
  p.mode = c.mode == "interval" ? PresenceMode::kInterval
                                : PresenceMode::kPointEvent;
  p.strictness = c.non_strict ? Strictness::kNonStrict : Strictness::kStrict;
  return p;
}

SynthParams synth_params(const SynthFlags& s, const RunConfig& c) {
  SynthParams p;
  p.n_vertices = *s.vertices;
  p.n_channels = s.channels;
  p.rng_seed = s.rng_seed;
  p.mean_duration = s.mean_duration;
  if (c.window_start) p.window.start = TimeStamp{*c.window_start};
  if (c.window_end) p.window.end = TimeStamp{*c.window_end};
  const std::size_t max_size =
      s.max_size.value_or(std::min(SizeDistribution::kDefaultMaxSize,
                                   std::max<std::size_t>(p.n_vertices, 2)));
  if (s.min_size < 2) throw InvalidParams("--min-size must be at least 2");
  if (s.min_size > max_size) {
    throw InvalidParams("--min-size " + std::to_string(s.min_size) +
                        " exceeds the largest feasible size " +
                        std::to_string(max_size));
  }
  p.sizes = SizeDistribution::two_plus_geometric_tail(s.multi_share,
                                                      s.tail_mean, max_size)
                .at_least(s.min_size);
  validate(p);
  return p;
}

struct LoadedGraph {
  TemporalHypergraph graph;
  BipartiteView view;
};

Window resolve_window(const RunConfig& c,
                      const std::vector<ChannelRecord>& records) {
  TimeStamp lo{0};
  TimeStamp hi{0};
  if (!records.empty()) {
    lo = TimeStamp::max();
    hi = TimeStamp::min();
    for (const ChannelRecord& r : records) {
      lo = std::min(lo, r.opened_at);
      hi = std::max(hi, r.closed_at);
    }
  }
  Window w{c.window_start ? TimeStamp{*c.window_start} : lo,
           c.window_end ? TimeStamp{*c.window_end} : hi};
  if (w.start > w.end) {
    throw UsageError("window start " + std::to_string(w.start.ticks) +
                     " is after window end " + std::to_string(w.end.ticks));
  }
  return w;
}

LoadedGraph load(const RunConfig& c) {
  if (c.input && c.synth.vertices) {
    throw UsageError("give either --input or --vertices, not both");
  }
  if (!c.input && !c.synth.vertices) {
    throw UsageError("an input is required: --input FILE or --vertices N");
  }

  std::vector<ChannelRecord> records;
  if (c.input) {
    std::ifstream in(*c.input);
    if (!in) throw Error("cannot open input file '" + *c.input + "'");
    RecordFormat format = format_for_path(*c.input);
    if (c.input_format) {
      format = *c.input_format == "csv" ? RecordFormat::kCsv
                                        : RecordFormat::kJsonl;
    }
    records = parse_records(in, format);
  } else {
    try {
      records = generate(synth_params(c.synth, c));
    } catch (const InvalidParams& e) {
      throw UsageError(e.what());
    }
  }

  const Window window = resolve_window(c, records);
  WindowFilter filter;
  filter.min_participants = c.min_participants;
  if (c.deny_list) {
    std::ifstream in(*c.deny_list);
    if (!in) throw Error("cannot open deny list '" + *c.deny_list + "'");
    filter.deny_list = read_deny_list(in);
  }
  records = apply_window(records, window, filter);

  LoadedGraph g;
  g.graph = build_hypergraph(records, window);
  g.view = to_bipartite(g.graph);
  return g;
}

ordered_json summary_json(const Summary& s) {
  return ordered_json{{"mean", round3(s.mean)},
                      {"median", s.median},
                      {"min", s.min},
                      {"max", s.max}};
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  if (!c.synth.vertices) throw UsageError("--vertices is required");
  SynthParams params;
  try {
    params = synth_params(c.synth, c);
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  }
  const auto records = generate(params);
  const RecordFormat format =
      c.format ? (*c.format == "csv" ? RecordFormat::kCsv
                                     : RecordFormat::kJsonl)
               : (c.out ? format_for_path(*c.out) : RecordFormat::kJsonl);
  if (c.out) {
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) throw Error("cannot write '" + *c.out + "'");
    write_records(file, records, format);
  } else {
    write_records(out, records, format);
  }
  return kOk;
}

int cmd_horizon(const RunConfig& c, std::ostream& out) {
  const LoadedGraph g = load(c);
  const auto seed = g.graph.find_vertex(c.seed);
  if (!seed) throw UsageError("unknown seed vertex '" + c.seed + "'");

  ordered_json j;
  j["seed"] = c.seed;
  if (c.model == "ignoring") {
    j["model"] = to_string(Model::kTimeIgnoring);
    auto& horizon = j["horizon"] = ordered_json::array();
    for (VertexId v : static_horizon(g.view, *seed)) {
      horizon.push_back(g.graph.label(v));
    }
  } else {
    const TimeStamp t =
        c.seed_time ? TimeStamp{*c.seed_time} : g.graph.window().start;
    const HorizonResult r = temporal_horizon(g.view, *seed, t, policy_of(c));
    j["model"] = to_string(Model::kTimeRespecting);
    j["seed_time"] = t.ticks;
    auto& informed = j["informed"] = ordered_json::object();
    for (const auto& [v, at] : r.informed) {
      informed[g.graph.label(v)] = at.ticks;
    }
    j["seed_return"] =
        r.seed_return ? ordered_json(r.seed_return->ticks) : ordered_json();
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
  const LoadedGraph g = load(c);
  SweepOptions options;
  options.policy = policy_of(c);
  options.seed_time_rule = c.seed_time_rule == "first-appearance"
                               ? SeedTimeRule::kFirstAppearance
                               : SeedTimeRule::kWindowStart;
  options.workers = c.workers;
  const ComparisonReport report = compare_models(g.view, options);

  const bool csv = c.format && *c.format == "csv";
  auto write = [&](std::ostream& os) {
    if (csv) {
      write_report_csv(os, report, g.graph.labels());
    } else {
      write_report_json(os, report, g.graph.labels());
    }
  };
  if (!c.out) {
    write(out);
    return kOk;
  }
  {
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) throw Error("cannot write '" + *c.out + "'");
    write(file);
  }
  ordered_json summary;
  summary["respecting"] = summary_json(report.respecting.summary);
  summary["ignoring"] = summary_json(report.ignoring.summary);
  out << summary.dump() << '\n';
  return kOk;
}

int cmd_components(const RunConfig& c, std::ostream& out) {
  const LoadedGraph g = load(c);
  ordered_json j = ordered_json::array();
  for (const auto& [size, count] : largest_components(g.view)) {
    j.push_back({{"size", size}, {"count", count}});
  }
  out << j.dump() << '\n';
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Time-respecting vs time-ignoring reachability in "
               "channel-based communication networks",
               "tvh"};
  app.require_subcommand(1);
  RunConfig c;

  auto* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic channel log");
  add_synth_flags(generate_cmd, c.synth);
  generate_cmd->add_option("--seed", c.synth.rng_seed, "Alias of --rng-seed");
  add_window_flags(generate_cmd, c);
  generate_cmd->add_option("-o,--out", c.out, "Output file (default stdout)");
  generate_cmd->add_option("--format", c.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  auto* horizon_cmd =
      app.add_subcommand("horizon", "Horizon of one seed vertex as JSON");
  add_input_flags(horizon_cmd, c);
  add_synth_flags(horizon_cmd, c.synth);
  add_policy_flags(horizon_cmd, c);
  horizon_cmd->add_option("--seed", c.seed, "Seed vertex label")->required();
  horizon_cmd->add_option("--seed-time", c.seed_time,
                          "Time the seed is informed (default window start)");
  horizon_cmd->add_option("--model", c.model, "respecting or ignoring")
      ->check(CLI::IsMember({"respecting", "ignoring"}));

  auto* compare_cmd = app.add_subcommand(
      "compare", "Horizon cardinalities of all vertices under both models");
  add_input_flags(compare_cmd, c);
  add_synth_flags(compare_cmd, c.synth);
  add_policy_flags(compare_cmd, c);
  compare_cmd->add_option("--seed-time-rule", c.seed_time_rule,
                          "window-start or first-appearance")
      ->check(CLI::IsMember({"window-start", "first-appearance"}));
  compare_cmd->add_option("--workers", c.workers,
                          "Worker threads (default: all cores)");
  compare_cmd->add_option("-o,--out", c.out, "Report file (default stdout)");
  compare_cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* components_cmd = app.add_subcommand(
      "components", "Component size histogram of the aggregated graph");
  add_input_flags(components_cmd, c);
  add_synth_flags(components_cmd, c.synth);

  std::vector<const char*> argv{"tvh"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tvh: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(c, out);
    if (horizon_cmd->parsed()) return cmd_horizon(c, out);
    if (compare_cmd->parsed()) return cmd_compare(c, out);
    if (components_cmd->parsed()) return cmd_components(c, out);
  } catch (const UsageError& e) {
    err << "tvh: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "tvh: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace tvh::cli
