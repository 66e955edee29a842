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

#ifndef SEVSCORE_MANIFEST_H_
#define SEVSCORE_MANIFEST_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sevscore {

inline constexpr std::array<std::string_view, 9> kManifestColumns = {
    "utterance_id",      "speaker_id",        "stage_id",
    "wav_path",          "frame_matrix_path", "ref_phonemes_path",
    "hyp_phonemes_path", "perceptual_score",  "noise_score",
};

struct ManifestRow {
  std::string utterance_id;
  std::string speaker_id;
  std::string stage_id;
  std::filesystem::path wav_path;
  std::optional<std::filesystem::path> frame_matrix_path;
  std::optional<std::filesystem::path> ref_phonemes_path;
  std::optional<std::filesystem::path> hyp_phonemes_path;
  double perceptual_score = 0.0;
  std::optional<int> noise_score;  // 0, 1 or 2
};

struct EvaluationManifest {
  std::vector<ManifestRow> rows;

  const ManifestRow* find(std::string_view utterance_id) const;
};

// Parses manifest CSV text. Relative paths are resolved against base_dir.
// Throws ValidationError for a wrong header, missing required fields,
// duplicate utterance ids, unparsable scores, or noise scores outside {0,1,2}.
EvaluationManifest parse_manifest(std::string_view text,
                                  const std::filesystem::path& base_dir = {});
EvaluationManifest load_manifest(const std::filesystem::path& path);

}  // namespace sevscore

#endif  // SEVSCORE_MANIFEST_H_
