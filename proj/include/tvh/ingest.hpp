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

#ifndef TVH_INGEST_HPP_
#define TVH_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tvh/types.hpp"

namespace tvh {

// Event-log readers and writers.
//
// JSONL: one object per line,
//   {"id":"r1","participants":["a","b"],"opened_at":5,"closed_at":9}
// with an optional non-negative integer "latency". Blank lines are skipped.
//
// CSV: header `id,participants,opened_at,closed_at`, participants separated
// by `|`. No quoting.
//
// Timestamps are integers; their unit is declared outside the file.
// Duplicate participant labels inside a record are collapsed, keeping the
// first occurrence. Record order is preserved. Errors carry 1-based line
// numbers: ParseError for syntax and type problems, InvalidRecord for
// opened_at > closed_at or an empty participant list.

enum class RecordFormat { kJsonl, kCsv };

std::vector<ChannelRecord> parse_jsonl(std::istream& in);
std::vector<ChannelRecord> parse_csv(std::istream& in);
std::vector<ChannelRecord> parse_records(std::istream& in, RecordFormat format);

void write_jsonl(std::ostream& out, std::span<const ChannelRecord> records);
// Throws Error if an id or label cannot be represented without quoting.
void write_csv(std::ostream& out, std::span<const ChannelRecord> records);
void write_records(std::ostream& out, std::span<const ChannelRecord> records,
                   RecordFormat format);

// Guesses the format from the extension: ".csv" is CSV, anything else JSONL.
RecordFormat format_for_path(const std::filesystem::path& path);

struct WindowFilter {
  // Labels removed from every record, e.g. bots.
  std::set<std::string> deny_list;
  // Records left with fewer participants are dropped.
  std::size_t min_participants = 1;
};

// Drops records lying wholly outside `window` (boundary-straddling records
// are kept whole), strips deny-listed labels, then drops records below
// filter.min_participants. Idempotent; never reorders.
std::vector<ChannelRecord> apply_window(std::span<const ChannelRecord> records,
                                        Window window,
                                        const WindowFilter& filter = {});

// One label per line; blank lines and lines starting with '#' are ignored.
std::set<std::string> read_deny_list(std::istream& in);

}  // namespace tvh

#endif  // TVH_INGEST_HPP_
