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

#include "tvh/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "json.hpp"
#include "tvh/errors.hpp"

namespace tvh {

namespace {

using nlohmann::json;

constexpr std::string_view kCsvHeader = "id,participants,opened_at,closed_at";

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

void dedupe(std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  auto keep = std::remove_if(labels.begin(), labels.end(),
                             [&](const std::string& l) {
                               return !seen.insert(l).second;
                             });
  labels.erase(keep, labels.end());
}

void validate(const ChannelRecord& r, std::size_t line) {
  if (r.opened_at > r.closed_at) {
    throw InvalidRecord(line, "opened_at " +
                                  std::to_string(r.opened_at.ticks) +
                                  " is after closed_at " +
                                  std::to_string(r.closed_at.ticks));
  }
  if (r.participants.empty()) throw InvalidRecord(line, "no participants");
}

std::int64_t json_int(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(line, std::string("missing key '") + key + "'");
  }
  if (!it->is_number_integer()) {
    throw ParseError(line, std::string("'") + key + "' must be an integer");
  }
  if (it->is_number_unsigned() &&
      it->get<std::uint64_t>() >
          static_cast<std::uint64_t>(
              std::numeric_limits<std::int64_t>::max())) {
    throw ParseError(line, std::string("'") + key + "' is out of range");
  }
  return it->get<std::int64_t>();
}

ChannelRecord record_from_json(const std::string& text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line, std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(line, "expected a JSON object");

  ChannelRecord r;
  auto id = obj.find("id");
  if (id == obj.end()) throw ParseError(line, "missing key 'id'");
  if (!id->is_string()) throw ParseError(line, "'id' must be a string");
  r.external_id = id->get<std::string>();

  auto participants = obj.find("participants");
  if (participants == obj.end()) {
    throw ParseError(line, "missing key 'participants'");
  }
  if (!participants->is_array()) {
    throw ParseError(line, "'participants' must be an array of strings");
  }
  for (const json& p : *participants) {
    if (!p.is_string()) {
      throw ParseError(line, "'participants' must be an array of strings");
    }
    r.participants.push_back(p.get<std::string>());
  }
  dedupe(r.participants);

  r.opened_at = TimeStamp{json_int(obj, "opened_at", line)};
  r.closed_at = TimeStamp{json_int(obj, "closed_at", line)};
  if (obj.contains("latency")) {
    r.latency = Duration{json_int(obj, "latency", line)};
    if (r.latency.ticks < 0) {
      throw InvalidRecord(line, "latency must be non-negative");
    }
  }
  validate(r, line);
  return r;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = s.find(sep, begin);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(begin));
      return out;
    }
    out.push_back(s.substr(begin, end - begin));
    begin = end + 1;
  }
}

std::int64_t csv_int(std::string_view field, const char* column,
                     std::size_t line) {
  std::int64_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw ParseError(line, std::string("'") + column +
                               "' is not an integer: '" +
                               std::string(field) + "'");
  }
  return value;
}

bool csv_safe(std::string_view s, bool is_label) {
  return s.find_first_of(is_label ? ",|\n\r" : ",\n\r") ==
         std::string_view::npos;
}

}  // namespace

std::vector<ChannelRecord> parse_jsonl(std::istream& in) {
  std::vector<ChannelRecord> records;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    strip_cr(line);
    if (blank(line)) continue;
    records.push_back(record_from_json(line, line_no));
  }
  return records;
}

std::vector<ChannelRecord> parse_csv(std::istream& in) {
  std::vector<ChannelRecord> records;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing CSV header");
  strip_cr(line);
  if (line != kCsvHeader) {
    throw ParseError(1, "expected header '" + std::string(kCsvHeader) + "'");
  }
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    strip_cr(line);
    if (blank(line)) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 columns, found " +
                                    std::to_string(fields.size()));
    }
    ChannelRecord r;
    r.external_id = std::string(fields[0]);
    if (!fields[1].empty()) {
      for (std::string_view label : split(fields[1], '|')) {
        if (!label.empty()) r.participants.emplace_back(label);
      }
    }
    dedupe(r.participants);
    r.opened_at = TimeStamp{csv_int(fields[2], "opened_at", line_no)};
    r.closed_at = TimeStamp{csv_int(fields[3], "closed_at", line_no)};
    validate(r, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ChannelRecord> parse_records(std::istream& in,
                                         RecordFormat format) {
  return format == RecordFormat::kCsv ? parse_csv(in) : parse_jsonl(in);
}

void write_jsonl(std::ostream& out, std::span<const ChannelRecord> records) {
  for (const ChannelRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["id"] = r.external_id;
    obj["participants"] = r.participants;
    obj["opened_at"] = r.opened_at.ticks;
    obj["closed_at"] = r.closed_at.ticks;
    if (r.latency.ticks != 0) obj["latency"] = r.latency.ticks;
    out << obj.dump() << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const ChannelRecord> records) {
  out << kCsvHeader << '\n';
  for (const ChannelRecord& r : records) {
    if (!csv_safe(r.external_id, false)) {
      throw Error("record id '" + r.external_id + "' cannot be written as CSV");
    }
    if (r.latency.ticks != 0) {
      throw Error("record '" + r.external_id +
                  "' has a latency, which CSV cannot carry");
    }
    out << r.external_id << ',';
    for (std::size_t i = 0; i < r.participants.size(); ++i) {
      if (!csv_safe(r.participants[i], true) || r.participants[i].empty()) {
        throw Error("label '" + r.participants[i] +
                    "' cannot be written as CSV");
      }
      if (i > 0) out << '|';
      out << r.participants[i];
    }
    out << ',' << r.opened_at.ticks << ',' << r.closed_at.ticks << '\n';
  }
}

void write_records(std::ostream& out, std::span<const ChannelRecord> records,
                   RecordFormat format) {
  if (format == RecordFormat::kCsv) {
    write_csv(out, records);
  } else {
    write_jsonl(out, records);
  }
}

RecordFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? RecordFormat::kCsv
                                    : RecordFormat::kJsonl;
}

std::vector<ChannelRecord> apply_window(std::span<const ChannelRecord> records,
                                        Window window,
                                        const WindowFilter& filter) {
  std::vector<ChannelRecord> out;
  out.reserve(records.size());
  for (const ChannelRecord& r : records) {
    if (!window.intersects(r.opened_at, r.closed_at)) continue;
    ChannelRecord kept = r;
    if (!filter.deny_list.empty()) {
      std::erase_if(kept.participants, [&](const std::string& label) {
        return filter.deny_list.contains(label);
      });
    }
    if (kept.participants.size() < filter.min_participants ||
        kept.participants.empty()) {
      continue;
    }
    out.push_back(std::move(kept));
  }
  return out;
}

std::set<std::string> read_deny_list(std::istream& in) {
  std::set<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (blank(line) || line.front() == '#') continue;
    labels.insert(line);
  }
  return labels;
}

}  // namespace tvh
