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

#ifndef SEVSCORE_CSV_H_
#define SEVSCORE_CSV_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sevscore {

// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

// Records of a CSV file, skipping blank lines and lines starting with '#'.
std::vector<std::vector<std::string>> read_csv_records(const std::filesystem::path& path);
std::vector<std::vector<std::string>> parse_csv_records(std::string_view text);

// Strict decimal parse of the whole field. Throws ValidationError naming what.
double parse_double(std::string_view field, std::string_view what);

// Shortest representation that round-trips to the same double.
std::string format_double(double v);

// Per-utterance feature values: utterance_id then one column per feature,
// missing values stored as empty fields.
struct FeatureTable {
  std::vector<std::string> columns;
  std::map<std::string, std::vector<std::optional<double>>> rows;

  std::optional<std::size_t> column_index(std::string_view name) const;
  // Column values keyed by utterance id; absent utterances are not listed.
  std::map<std::string, std::optional<double>> column(std::string_view name) const;
  // Adds other's columns. A column present in both may only be filled if it holds no
  // values here; otherwise throws ValidationError.
  void merge(const FeatureTable& other);
};

FeatureTable parse_feature_table(std::string_view text);
FeatureTable read_feature_table(const std::filesystem::path& path);
// comment lines (without the leading '#') are emitted first.
std::string render_feature_table(const FeatureTable& table,
                                 const std::vector<std::string>& comments = {});

}  // namespace sevscore

#endif  // SEVSCORE_CSV_H_
