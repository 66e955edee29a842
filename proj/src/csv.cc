// Copyright 2026 The Sevscore Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sevscore/csv.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sevscore/error.h"

namespace sevscore {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw ValidationError("unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    records.push_back(split_csv_line(line));
  }
  return records;
}

std::vector<std::vector<std::string>> read_csv_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_csv_records(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

double parse_double(std::string_view field, std::string_view what) {
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ValidationError(fmt::format("unparsable {}: '{}'", what, field));
  }
  return v;
}

std::string format_double(double v) { return fmt::format("{}", v); }

std::optional<std::size_t> FeatureTable::column_index(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

std::map<std::string, std::optional<double>> FeatureTable::column(std::string_view name) const {
  std::map<std::string, std::optional<double>> out;
  const auto idx = column_index(name);
  if (!idx) return out;
  for (const auto& [utt, values] : rows) out.emplace(utt, values[*idx]);
  return out;
}

void FeatureTable::merge(const FeatureTable& other) {
  std::vector<std::size_t> target(other.columns.size());
  for (std::size_t c = 0; c < other.columns.size(); ++c) {
    if (const auto existing = column_index(other.columns[c])) {
      for (const auto& [utt, values] : rows) {
        if (values[*existing]) {
          throw ValidationError("duplicate feature column: " + other.columns[c]);
        }
      }
      target[c] = *existing;
    } else {
      target[c] = columns.size();
      columns.push_back(other.columns[c]);
    }
  }
  for (auto& [utt, values] : rows) values.resize(columns.size());
  for (const auto& [utt, values] : other.rows) {
    auto& row = rows[utt];
    row.resize(columns.size());
    for (std::size_t c = 0; c < values.size(); ++c) row[target[c]] = values[c];
  }
}

FeatureTable parse_feature_table(std::string_view text) {
  const auto records = parse_csv_records(text);
  if (records.empty()) throw ValidationError("feature table: missing header");
  const auto& header = records.front();
  if (header.empty() || header.front() != "utterance_id") {
    throw ValidationError("feature table: first column must be utterance_id");
  }
  FeatureTable table;
  table.columns.assign(header.begin() + 1, header.end());
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw ValidationError(fmt::format("feature table: row {} has {} fields, expected {}",
                                        r, rec.size(), header.size()));
    }
    std::vector<std::optional<double>> values(table.columns.size());
    for (std::size_t c = 1; c < rec.size(); ++c) {
      if (!rec[c].empty()) values[c - 1] = parse_double(rec[c], header[c]);
    }
    if (!table.rows.emplace(rec.front(), std::move(values)).second) {
      throw ValidationError("feature table: duplicate utterance_id " + rec.front());
    }
  }
  return table;
}

FeatureTable read_feature_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_feature_table(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string render_feature_table(const FeatureTable& table,
                                 const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "utterance_id";
  for (const auto& c : table.columns) out += "," + csv_escape(c);
  out += "\n";
  for (const auto& [utt, values] : table.rows) {
    out += csv_escape(utt);
    for (const auto& v : values) {
      out += ",";
      if (v) out += format_double(*v);
    }
    out += "\n";
  }
  return out;
}

}  // namespace sevscore
