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

#ifndef SEVSCORE_AGGREGATE_H_
#define SEVSCORE_AGGREGATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sevscore/manifest.h"

namespace sevscore {

enum class AggregationKey { kSpeaker, kSpeakerStage };
enum class Target { kPerceptual, kNoise };

std::string_view to_string(AggregationKey key);
std::string_view to_string(Target target);
// "speaker" or "speaker-stage"; throws ValidationError otherwise.
AggregationKey parse_aggregation_key(std::string_view text);
// "perceptual" or "noise"; throws ValidationError otherwise.
Target parse_target(std::string_view text);

// Group label of a row: the speaker id, or "speaker:stage".
std::string group_label(const ManifestRow& row, AggregationKey key);

struct AggregatePoint {
  std::string key;
  double feature_mean = 0.0;
  double target = 0.0;
  std::size_t n_utterances = 0;
};

struct Aggregation {
  std::vector<AggregatePoint> points;  // sorted by key
  std::vector<std::string> exclusions;
};

// Mean of the available utterance values per group, paired with the group's
// target score. Utterances without a value are skipped; groups left empty are
// dropped. Both are recorded in exclusions. Perceptual scores must be constant
// within each speaker+stage group; a speaker group's perceptual target is the
// mean over its stages. The noise target is the mean noise score of the
// group's rows that carry one. Sums run in utterance-id order, so the result
// does not depend on row order. Throws ValidationError when no manifest
// utterance has a value.
Aggregation aggregate_scores(const std::map<std::string, std::optional<double>>& values,
                             const EvaluationManifest& manifest, AggregationKey key,
                             Target target = Target::kPerceptual);

}  // namespace sevscore

#endif  // SEVSCORE_AGGREGATE_H_
