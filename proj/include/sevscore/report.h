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

#ifndef SEVSCORE_REPORT_H_
#define SEVSCORE_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sevscore/aggregate.h"
#include "sevscore/csv.h"
#include "sevscore/manifest.h"
#include "sevscore/stats.h"

namespace sevscore {

struct CorrelationRow {
  std::string feature;  // column key, e.g. "wada_snr" or "per"
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

struct CorrelationReport {
  std::vector<CorrelationRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> exclusions;
};

enum class ReportFormat { kCsv, kMarkdown };
ReportFormat parse_report_format(std::string_view text);

// Column key reserved for phoneme error rate.
inline constexpr std::string_view kPerColumn = "per";

// Report label for a column key: "WADA SNR", "Phoneme Error Rate", ...
std::string report_label(std::string_view column);

// "***" for p < 0.001, "**" for p < 0.01, "*" for p < 0.05, otherwise the
// value with four decimals.
std::string format_p_value(double p);

// Aggregates every column of the table and correlates it with the target.
// Columns with fewer than 3 groups or a constant side are listed in
// exclusions instead of rows.
CorrelationReport correlate_features(const FeatureTable& table,
                                     const EvaluationManifest& manifest,
                                     AggregationKey key, Target target);

// Throws ValidationError for a report without rows.
std::string render_report(const CorrelationReport& report, ReportFormat format);
void emit_report(const CorrelationReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace sevscore

#endif  // SEVSCORE_REPORT_H_
