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

#include "sevscore/manifest.h"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sevscore/csv.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || base.empty()) return path;
  return base / path;
}

std::optional<std::filesystem::path> optional_path(const std::filesystem::path& base,
                                                   const std::string& p) {
  if (p.empty()) return std::nullopt;
  return resolve(base, p);
}

}  // namespace

const ManifestRow* EvaluationManifest::find(std::string_view utterance_id) const {
  for (const auto& row : rows) {
    if (row.utterance_id == utterance_id) return &row;
  }
  return nullptr;
}

EvaluationManifest parse_manifest(std::string_view text,
                                  const std::filesystem::path& base_dir) {
  const auto records = parse_csv_records(text);
  if (records.empty()) throw ValidationError("manifest: missing header");
  const auto& header = records.front();
  for (const auto column : kManifestColumns) {
    if (std::find(header.begin(), header.end(), column) == header.end()) {
      throw ValidationError(fmt::format("manifest: missing required column {}", column));
    }
  }
  if (header.size() != kManifestColumns.size() ||
      !std::equal(header.begin(), header.end(), kManifestColumns.begin())) {
    throw ValidationError(fmt::format("manifest: header must be exactly {}",
                                      fmt::join(kManifestColumns, ",")));
  }

  EvaluationManifest manifest;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r];
    if (f.size() != kManifestColumns.size()) {
      throw ValidationError(fmt::format("manifest: row {} has {} fields, expected {}", r,
                                        f.size(), kManifestColumns.size()));
    }
    ManifestRow row;
    row.utterance_id = f[0];
    row.speaker_id = f[1];
    row.stage_id = f[2];
    if (row.utterance_id.empty()) {
      throw ValidationError(fmt::format("manifest: row {} has no utterance_id", r));
    }
    if (row.speaker_id.empty()) {
      throw ValidationError("manifest: missing speaker_id for " + row.utterance_id);
    }
    if (f[3].empty()) throw ValidationError("manifest: missing wav_path for " + row.utterance_id);
    if (!seen.insert(row.utterance_id).second) {
      throw ValidationError("manifest: duplicate utterance_id " + row.utterance_id);
    }
    row.wav_path = resolve(base_dir, f[3]);
    row.frame_matrix_path = optional_path(base_dir, f[4]);
    row.ref_phonemes_path = optional_path(base_dir, f[5]);
    row.hyp_phonemes_path = optional_path(base_dir, f[6]);
    row.perceptual_score =
        parse_double(f[7], "perceptual_score for " + row.utterance_id);
    if (!std::isfinite(row.perceptual_score)) {
      throw ValidationError("manifest: non-finite perceptual_score for " + row.utterance_id);
    }
    if (!f[8].empty()) {
      const double noise = parse_double(f[8], "noise_score for " + row.utterance_id);
      if (noise != 0.0 && noise != 1.0 && noise != 2.0) {
        throw ValidationError("noise score out of range for " + row.utterance_id);
      }
      row.noise_score = static_cast<int>(noise);
    }
    manifest.rows.push_back(std::move(row));
  }
  return manifest;
}

EvaluationManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

}  // namespace sevscore
