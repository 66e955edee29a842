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

#include "sevscore/aggregate.h"

#include <fmt/format.h>

#include <algorithm>

#include "sevscore/error.h"

namespace sevscore {

std::string_view to_string(AggregationKey key) {
  return key == AggregationKey::kSpeaker ? "speaker" : "speaker-stage";
}

std::string_view to_string(Target target) {
  return target == Target::kPerceptual ? "perceptual" : "noise";
}

AggregationKey parse_aggregation_key(std::string_view text) {
  if (text == "speaker") return AggregationKey::kSpeaker;
  if (text == "speaker-stage") return AggregationKey::kSpeakerStage;
  throw ValidationError(fmt::format("unknown aggregation key '{}'", text));
}

Target parse_target(std::string_view text) {
  if (text == "perceptual") return Target::kPerceptual;
  if (text == "noise") return Target::kNoise;
  throw ValidationError(fmt::format("unknown target '{}'", text));
}

std::string group_label(const ManifestRow& row, AggregationKey key) {
  if (key == AggregationKey::kSpeaker) return row.speaker_id;
  return row.speaker_id + ":" + row.stage_id;
}

Aggregation aggregate_scores(const std::map<std::string, std::optional<double>>& values,
                             const EvaluationManifest& manifest, AggregationKey key,
                             Target target) {
  // speaker:stage -> perceptual score, checked for consistency.
  std::map<std::string, double> stage_scores;
  for (const auto& row : manifest.rows) {
    const std::string label = group_label(row, AggregationKey::kSpeakerStage);
    const auto [it, inserted] = stage_scores.emplace(label, row.perceptual_score);
    if (!inserted && it->second != row.perceptual_score) {
      throw ValidationError(fmt::format(
          "perceptual score differs within speaker-stage group {}", label));
    }
  }

  std::map<std::string, std::map<std::string, const ManifestRow*>> groups;
  for (const auto& row : manifest.rows) {
    groups[group_label(row, key)].emplace(row.utterance_id, &row);
  }

  Aggregation out;
  bool any_value = false;
  for (const auto& [label, members] : groups) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& [utt, row] : members) {
      const auto it = values.find(utt);
      if (it == values.end() || !it->second) {
        out.exclusions.push_back(fmt::format("utterance {}: missing value", utt));
        continue;
      }
      sum += *it->second;
      ++n;
    }
    if (n == 0) {
      out.exclusions.push_back(fmt::format("group {}: no utterance values", label));
      continue;
    }
    any_value = true;

    double target_value = 0.0;
    if (target == Target::kPerceptual) {
      std::map<std::string, double> stages;
      for (const auto& [utt, row] : members) {
        const std::string stage = group_label(*row, AggregationKey::kSpeakerStage);
        stages.emplace(stage, stage_scores.at(stage));
      }
      for (const auto& [stage, score] : stages) target_value += score;
      target_value /= static_cast<double>(stages.size());
    } else {
      std::size_t rated = 0;
      for (const auto& [utt, row] : members) {
        if (row->noise_score) {
          target_value += *row->noise_score;
          ++rated;
        }
      }
      if (rated == 0) {
        out.exclusions.push_back(fmt::format("group {}: no noise score", label));
        continue;
      }
      target_value /= static_cast<double>(rated);
    }
    out.points.push_back({label, sum / static_cast<double>(n), target_value, n});
  }
  if (!any_value) throw ValidationError("empty intersection of features and manifest");
  return out;
}

}  // namespace sevscore
