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

#ifndef SEVSCORE_FEATURES_H_
#define SEVSCORE_FEATURES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sevscore/audio.h"
#include "sevscore/pitch.h"

namespace sevscore {

enum class Feature {
  kShimmer,
  kJitter,
  kSigmaF0,
  kVoicingRatio,
  kHnr,
  kWadaSnr,
  kCpp,
  kSpeechLmPpl,
};

inline constexpr std::size_t kFeatureCount = 8;
inline constexpr std::array<Feature, kFeatureCount> kAllFeatures = {
    Feature::kShimmer, Feature::kJitter,  Feature::kSigmaF0, Feature::kVoicingRatio,
    Feature::kHnr,     Feature::kWadaSnr, Feature::kCpp,     Feature::kSpeechLmPpl,
};

// Column key used in CSV files, e.g. "sigma_f0".
std::string_view feature_key(Feature f);
// Row label used in reports, e.g. "WADA SNR".
std::string_view feature_label(Feature f);
std::optional<Feature> parse_feature(std::string_view key);

// An utterance-level scalar. Units: shimmer, jitter and voicing ratio are
// ratios; sigma_f0 is Hz; hnr, wada_snr and cpp are dB; speechlm_ppl is a
// perplexity.
struct FeatureValue {
  Feature name;
  double value;
  std::string utterance_id;
};

// Mean relative cycle-to-cycle period change, mean |T[i+1]-T[i]| / T[i].
// Throws InsufficientDataError for fewer than 2 periods.
double jitter(std::span<const double> periods);
double jitter(const CycleSeries& cycles);

// Mean relative cycle-to-cycle amplitude change, mean |A[i+1]-A[i]| / A[i].
// Throws InsufficientDataError for fewer than 2 amplitudes and
// ValidationError("degenerate amplitude") if any amplitude is zero.
double shimmer(std::span<const double> amplitudes);
double shimmer(const CycleSeries& cycles);

// Population standard deviation of f0 over voiced frames.
double sigma_f0(std::span<const double> voiced_f0);
double sigma_f0(const PitchTrack& track);

double voicing_ratio(const PitchTrack& track);

// 10*log10(r / (1 - r)) with r clamped to [1e-6, 1 - 1e-6].
double hnr_from_correlation(double r);

// Mean frame HNR over the voiced frames of track, using the window-normalized
// autocorrelation at each frame's pitch lag.
double hnr(const AudioClip& clip, const PitchTrack& track);

// ln(mean |x|) - mean(ln |x|) over the non-zero samples.
double wada_statistic(std::span<const double> samples);
// Inverts the G(SNR) table with linear interpolation, clamped to [-20, 100].
double wada_snr_from_statistic(double statistic);
double wada_snr(const AudioClip& clip);

struct CppOptions {
  double frame_length = 0.040;
  double hop = 0.020;
  double f0_low = 60.0;    // longest searched quefrency is 1/f0_low
  double f0_high = 330.0;  // shortest searched quefrency is 1/f0_high
  double silence_threshold = 0.01;
};

// Cepstral peak prominence of one Hann-windowed frame. The cepstrum is the
// inverse transform of the dB power spectrum, scaled so each coefficient is
// the peak-to-valley depth (dB) of the corresponding cosine ripple in the
// spectrum.
double cpp_frame(std::span<const double> windowed_frame, int sample_rate,
                 const CppOptions& options = {});

// Mean cepstral peak prominence over frames passing the RMS gate.
double cpp(const AudioClip& clip, const CppOptions& options = {});

// Arithmetic mean of a non-empty series of finite values.
double scalarize(std::span<const double> series);

struct FeatureOptions {
  PitchOptions pitch;
  CppOptions cpp;
};

// All acoustic features of one utterance. A feature that cannot be computed
// is empty and its error message is kept.
struct FeatureBundle {
  std::string utterance_id;
  std::array<std::optional<double>, kFeatureCount> values;
  std::array<std::string, kFeatureCount> errors;
  PitchTrack track;

  std::optional<double>& operator[](Feature f) { return values[static_cast<std::size_t>(f)]; }
  const std::optional<double>& operator[](Feature f) const {
    return values[static_cast<std::size_t>(f)];
  }
};

// Computes every acoustic feature except speechlm_ppl.
FeatureBundle compute_features(const AudioClip& clip, const FeatureOptions& options = {});

}  // namespace sevscore

#endif  // SEVSCORE_FEATURES_H_
