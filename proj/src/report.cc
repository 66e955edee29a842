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

#include "sevscore/report.h"

#include <fmt/format.h>

#include <fstream>

#include "sevscore/error.h"
#include "sevscore/features.h"

namespace sevscore {

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  throw ValidationError(fmt::format("unknown report format '{}'", text));
}

std::string report_label(std::string_view column) {
  if (column == kPerColumn) return "Phoneme Error Rate";
  if (const auto f = parse_feature(column)) return std::string(feature_label(*f));
  return std::string(column);
}

std::string format_p_value(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return fmt::format("{:.4f}", p);
}

CorrelationReport correlate_features(const FeatureTable& table,
                                     const EvaluationManifest& manifest,
                                     AggregationKey key, Target target) {
  CorrelationReport report;
  report.metadata.emplace_back("aggregation_key", std::string(to_string(key)));
  report.metadata.emplace_back("target", std::string(to_string(target)));
  for (const auto& column : table.columns) {
    Aggregation agg;
    try {
      agg = aggregate_scores(table.column(column), manifest, key, target);
    } catch (const ValidationError& e) {
      report.exclusions.push_back(fmt::format("{}: {}", column, e.what()));
      continue;
    }
    for (const auto& e : agg.exclusions) {
      report.exclusions.push_back(fmt::format("{}: {}", column, e));
    }
    std::vector<double> x, y;
    for (const auto& p : agg.points) {
      x.push_back(p.feature_mean);
      y.push_back(p.target);
    }
    try {
      const PearsonResult pr = pearson(x, y);
      report.rows.push_back({column, pr.r, pr.p, pr.n});
    } catch (const ValidationError& e) {
      report.exclusions.push_back(fmt::format("{}: not correlated ({})", column, e.what()));
    }
  }
  return report;
}

std::string render_report(const CorrelationReport& report, ReportFormat format) {
  if (report.rows.empty()) throw ValidationError("empty report");
  std::string out;
  if (format == ReportFormat::kCsv) {
    out += "feature,r,p,n,significance\n";
    for (const auto& row : report.rows) {
      out += fmt::format("{},{},{},{},{}\n", csv_escape(row.feature), format_double(row.r),
                         format_double(row.p), row.n, format_p_value(row.p));
    }
    for (const auto& [k, v] : report.metadata) out += fmt::format("# {}={}\n", k, v);
    for (const auto& e : report.exclusions) out += fmt::format("# excluded: {}\n", e);
    return out;
  }
  out += "| Feature | r (p) | n |\n";
  out += "|---|---|---|\n";
  for (const auto& row : report.rows) {
    out += fmt::format("| {} | {:.4f} ({}) | {} |\n", report_label(row.feature), row.r,
                       format_p_value(row.p), row.n);
  }
  out += "\nSmaller than 0.05 (*), 0.01 (**), 0.001 (***), otherwise full p-value.\n\n";
  for (const auto& [k, v] : report.metadata) out += fmt::format("- {}: {}\n", k, v);
  if (!report.exclusions.empty()) {
    out += fmt::format("- excluded ({}):\n", report.exclusions.size());
    for (const auto& e : report.exclusions) out += fmt::format("  - {}\n", e);
  }
  return out;
}

void emit_report(const CorrelationReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  const std::string text = render_report(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sevscore
