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

#ifndef SEVSCORE_CONFIG_H_
#define SEVSCORE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sevscore/aggregate.h"
#include "sevscore/codebook.h"
#include "sevscore/features.h"
#include "sevscore/mfcc.h"

namespace sevscore {

enum class EmbeddingSource { kMfcc, kFrameMatrix };

struct ConfigKey {
  std::string_view name;
  std::string_view default_value;
  std::string_view description;
};

// Every configuration key with its default.
const std::vector<ConfigKey>& config_keys();

// Key-value run configuration: defaults, then an INI-style file, then
// explicit overrides. Values are normalized on set so equivalent spellings
// ("0.10" and "0.1") hash identically.
class RunConfig {
 public:
  RunConfig();

  // "key = value" lines; '#' and ';' start comments; [section] headers are
  // ignored. Throws ValidationError for unknown keys or bad values.
  void load_text(std::string_view text);
  void load_file(const std::filesystem::path& path);
  void set(std::string_view key, std::string_view value);

  const std::string& get(std::string_view key) const;
  double get_double(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;
  bool get_bool(std::string_view key) const;

  // Sorted "key=value" lines.
  std::string canonical() const;
  // FNV-1a 64 of canonical().
  std::uint64_t hash() const;
  std::string hash_hex() const;

  FeatureOptions feature_options() const;
  MfccOptions mfcc_options() const;
  KMeansOptions kmeans_options() const;
  AggregationKey aggregation_key() const;
  EmbeddingSource embedding() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

std::string hash_to_hex(std::uint64_t h);

}  // namespace sevscore

#endif  // SEVSCORE_CONFIG_H_
