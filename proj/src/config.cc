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

#include "sevscore/config.h"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "sevscore/csv.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

enum class Kind { kReal, kCount, kSwitch, kChoice };

struct KeySpec {
  ConfigKey key;
  Kind kind;
  std::vector<std::string_view> choices;
};

const std::vector<KeySpec>& specs() {
  static const std::vector<KeySpec> s = {
      {{"f0_min", "75", "pitch floor, Hz"}, Kind::kReal, {}},
      {{"f0_max", "500", "pitch ceiling, Hz"}, Kind::kReal, {}},
      {{"voicing_threshold", "0.45", "autocorrelation peak needed for voicing"}, Kind::kReal, {}},
      {{"silence_threshold", "0.01", "frame RMS gate, full scale = 1"}, Kind::kReal, {}},
      {{"octave_ratio", "1.3", "max ratio of consecutive periods"}, Kind::kReal, {}},
      {{"mfcc_coeffs", "13", "MFCC embedding dimensionality"}, Kind::kCount, {}},
      {{"k", "100", "codebook size"}, Kind::kCount, {}},
      {{"max_iters", "100", "k-means iteration cap"}, Kind::kCount, {}},
      {{"tol", "1e-06", "k-means relative inertia tolerance"}, Kind::kReal, {}},
      {{"seed", "0", "random seed"}, Kind::kCount, {}},
      {{"order", "3", "n-gram order"}, Kind::kCount, {}},
      {{"alpha", "0.1", "additive smoothing constant"}, Kind::kReal, {}},
      {{"dedup", "on", "collapse repeated adjacent units"}, Kind::kSwitch, {}},
      {{"agg_key", "speaker-stage", "aggregation unit"}, Kind::kChoice,
       {"speaker", "speaker-stage"}},
      {{"embedding", "mfcc", "frame embedding source"}, Kind::kChoice,
       {"mfcc", "frame-matrix"}},
      {{"embedding_norm", "none", "per-utterance frame normalization before k-means"},
       Kind::kChoice, {"none", "cmvn"}},
  };
  return s;
}

const KeySpec& spec_for(std::string_view key) {
  for (const auto& s : specs()) {
    if (s.key.name == key) return s;
  }
  throw ValidationError(fmt::format("unknown config key '{}'", key));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string normalize(const KeySpec& spec, std::string_view value) {
  value = trim(value);
  const std::string what = fmt::format("value for {}", spec.key.name);
  switch (spec.kind) {
    case Kind::kReal:
      return format_double(parse_double(value, what));
    case Kind::kCount: {
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw ValidationError(fmt::format("unparsable {}: '{}'", what, value));
      }
      return std::to_string(v);
    }
    case Kind::kSwitch:
      if (value == "on" || value == "true" || value == "1") return "on";
      if (value == "off" || value == "false" || value == "0") return "off";
      throw ValidationError(fmt::format("{} must be on or off", what));
    case Kind::kChoice:
      for (auto c : spec.choices) {
        if (c == value) return std::string(c);
      }
      throw ValidationError(fmt::format("invalid {}: '{}'", what, value));
  }
  return std::string(value);
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> k;
    for (const auto& s : specs()) k.push_back(s.key);
    return k;
  }();
  return keys;
}

RunConfig::RunConfig() {
  for (const auto& s : specs()) values_[std::string(s.key.name)] = normalize(s, s.key.default_value);
}

void RunConfig::set(std::string_view key, std::string_view value) {
  const auto& spec = spec_for(key);
  values_[std::string(key)] = normalize(spec, value);
}

void RunConfig::load_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = line;
    if (const auto c = l.find_first_of("#;"); c != std::string_view::npos) l = l.substr(0, c);
    l = trim(l);
    if (l.empty() || l.front() == '[') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(fmt::format("config line {}: expected key = value", line_no));
    }
    set(trim(l.substr(0, eq)), trim(l.substr(eq + 1)));
  }
}

void RunConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    load_text(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

const std::string& RunConfig::get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError(fmt::format("unknown config key '{}'", key));
  return it->second;
}

double RunConfig::get_double(std::string_view key) const {
  return parse_double(get(key), key);
}

std::int64_t RunConfig::get_int(std::string_view key) const {
  return std::stoll(get(key));
}

bool RunConfig::get_bool(std::string_view key) const { return get(key) == "on"; }

std::string RunConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_to_hex(std::uint64_t h) { return fmt::format("{:016x}", h); }

std::string RunConfig::hash_hex() const { return hash_to_hex(hash()); }

FeatureOptions RunConfig::feature_options() const {
  FeatureOptions o;
  o.pitch.f0_min = get_double("f0_min");
  o.pitch.f0_max = get_double("f0_max");
  o.pitch.voicing_threshold = get_double("voicing_threshold");
  o.pitch.silence_threshold = get_double("silence_threshold");
  o.pitch.octave_ratio = get_double("octave_ratio");
  o.pitch.validate();
  o.cpp.silence_threshold = o.pitch.silence_threshold;
  return o;
}

MfccOptions RunConfig::mfcc_options() const {
  MfccOptions o;
  o.n_coeffs = static_cast<int>(get_int("mfcc_coeffs"));
  return o;
}

KMeansOptions RunConfig::kmeans_options() const {
  KMeansOptions o;
  o.k = static_cast<std::size_t>(get_int("k"));
  o.seed = static_cast<std::uint64_t>(get_int("seed"));
  o.max_iters = static_cast<std::size_t>(get_int("max_iters"));
  o.tol = get_double("tol");
  return o;
}

AggregationKey RunConfig::aggregation_key() const {
  return parse_aggregation_key(get("agg_key"));
}

EmbeddingSource RunConfig::embedding() const {
  return get("embedding") == "mfcc" ? EmbeddingSource::kMfcc : EmbeddingSource::kFrameMatrix;
}

}  // namespace sevscore
