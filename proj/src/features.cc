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

#include "sevscore/features.h"

#include <algorithm>
#include <cmath>

#include "fft.h"
#include "sevscore/error.h"
#include "wada_table.h"

namespace sevscore {
namespace {

constexpr double kHnrClamp = 1e-6;
constexpr double kPowerFloor = 1e-30;

struct FeatureNames {
  Feature feature;
  std::string_view key;
  std::string_view label;
};

constexpr std::array<FeatureNames, kFeatureCount> kNames = {{
    {Feature::kShimmer, "shimmer", "Shimmer"},
    {Feature::kJitter, "jitter", "Jitter"},
    {Feature::kSigmaF0, "sigma_f0", "σF0"},
    {Feature::kVoicingRatio, "voicing_ratio", "Voicing%"},
    {Feature::kHnr, "hnr", "HNR"},
    {Feature::kWadaSnr, "wada_snr", "WADA SNR"},
    {Feature::kCpp, "cpp", "CPP"},
    {Feature::kSpeechLmPpl, "speechlm_ppl", "SpeechLMScore"},
}};

double frame_rms(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

}  // namespace

std::string_view feature_key(Feature f) { return kNames[static_cast<std::size_t>(f)].key; }

std::string_view feature_label(Feature f) {
  return kNames[static_cast<std::size_t>(f)].label;
}

std::optional<Feature> parse_feature(std::string_view key) {
  for (const auto& n : kNames) {
    if (n.key == key) return n.feature;
  }
  return std::nullopt;
}

double jitter(std::span<const double> periods) {
  if (periods.size() < 2) throw InsufficientDataError("insufficient voiced cycles");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
    acc += std::abs((periods[i + 1] - periods[i]) / periods[i]);
  }
  return acc / static_cast<double>(periods.size() - 1);
}

double jitter(const CycleSeries& cycles) { return jitter(cycles.periods); }

double shimmer(std::span<const double> amplitudes) {
  if (amplitudes.size() < 2) throw InsufficientDataError("insufficient voiced cycles");
  if (std::find(amplitudes.begin(), amplitudes.end(), 0.0) != amplitudes.end()) {
    throw ValidationError("degenerate amplitude");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < amplitudes.size(); ++i) {
    acc += std::abs((amplitudes[i + 1] - amplitudes[i]) / amplitudes[i]);
  }
  return acc / static_cast<double>(amplitudes.size() - 1);
}

double shimmer(const CycleSeries& cycles) { return shimmer(cycles.amplitudes); }

double sigma_f0(std::span<const double> voiced_f0) {
  if (voiced_f0.size() < 2) throw InsufficientDataError("insufficient voiced material");
  double mean = 0.0;
  for (double v : voiced_f0) mean += v;
  mean /= static_cast<double>(voiced_f0.size());
  double acc = 0.0;
  for (double v : voiced_f0) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(voiced_f0.size()));
}

double sigma_f0(const PitchTrack& track) {
  std::vector<double> f0;
  for (std::size_t i = 0; i < track.size(); ++i) {
    if (track.voiced[i]) f0.push_back(track.f0[i]);
  }
  return sigma_f0(f0);
}

double voicing_ratio(const PitchTrack& track) {
  if (track.size() == 0) throw ValidationError("empty pitch track");
  return static_cast<double>(track.voiced_count()) / static_cast<double>(track.size());
}

double hnr_from_correlation(double r) {
  r = std::clamp(r, kHnrClamp, 1.0 - kHnrClamp);
  return 10.0 * std::log10(r / (1.0 - r));
}

double hnr(const AudioClip& clip, const PitchTrack& track) {
  const int rate = clip.sample_rate;
  const std::size_t frame_len = seconds_to_samples(track.frame_length, rate);
  const std::size_t hop = seconds_to_samples(track.frame_hop, rate);
  double acc = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < track.size(); ++i) {
    if (!track.voiced[i] || !(track.f0[i] > 0.0)) continue;
    const std::size_t start = i * hop;
    if (start + frame_len > clip.samples.size()) break;
    const auto lag = static_cast<std::size_t>(std::llround(rate / track.f0[i]));
    const std::span<const double> frame(clip.samples.data() + start, frame_len);
    acc += hnr_from_correlation(normalized_autocorrelation(frame, lag));
    ++n;
  }
  if (n == 0) throw InsufficientDataError("insufficient voiced material");
  return acc / static_cast<double>(n);
}

double wada_statistic(std::span<const double> samples) {
  double sum_abs = 0.0;
  double sum_log = 0.0;
  std::size_t n = 0;
  for (double v : samples) {
    const double a = std::abs(v);
    if (a == 0.0) continue;
    sum_abs += a;
    sum_log += std::log(a);
    ++n;
  }
  if (n == 0) throw ValidationError("all-zero clip");
  return std::log(sum_abs / n) - sum_log / n;
}

double wada_snr_from_statistic(double statistic) {
  const auto& g = internal::kWadaTable;
  if (statistic <= g.front()) return internal::kWadaMinDb;
  if (statistic >= g.back()) return internal::kWadaMaxDb;
  // Last entry strictly below the statistic.
  const auto it = std::lower_bound(g.begin(), g.end(), statistic);
  const std::size_t hi = static_cast<std::size_t>(it - g.begin());
  const std::size_t lo = hi - 1;
  const double frac = (statistic - g[lo]) / (g[hi] - g[lo]);
  return internal::kWadaMinDb + static_cast<double>(lo) + frac;
}

double wada_snr(const AudioClip& clip) {
  return wada_snr_from_statistic(wada_statistic(clip.samples));
}

double cpp_frame(std::span<const double> windowed_frame, int sample_rate,
                 const CppOptions& options) {
  std::size_t fft_size = 1;
  while (fft_size < windowed_frame.size()) fft_size *= 2;
  const auto q_lo = static_cast<std::size_t>(std::ceil(sample_rate / options.f0_high));
  const auto q_hi = static_cast<std::size_t>(std::floor(sample_rate / options.f0_low));
  if (q_hi >= fft_size / 2 || q_lo >= q_hi) {
    throw ValidationError("cpp: quefrency band does not fit the frame");
  }
  internal::RealFft fft(fft_size);
  const auto spectrum = fft.forward(windowed_frame);
  std::vector<std::complex<double>> log_power(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    log_power[k] = 10.0 * std::log10(std::max(std::norm(spectrum[k]), kPowerFloor));
  }
  // A cosine ripple of peak-to-valley depth D dB in the log spectrum puts
  // D / 4 into the normalized cepstrum at its quefrency.
  const auto cepstrum = fft.inverse(log_power);
  std::vector<double> depth(cepstrum.begin(), cepstrum.end());
  for (auto& v : depth) v *= 4.0;

  // Least-squares line c = a + b q over the band, centered on the mean q.
  const double count = static_cast<double>(q_hi - q_lo + 1);
  double mean_q = 0.0, mean_c = 0.0;
  for (std::size_t q = q_lo; q <= q_hi; ++q) {
    mean_q += static_cast<double>(q);
    mean_c += depth[q];
  }
  mean_q /= count;
  mean_c /= count;
  double sqq = 0.0, sqc = 0.0;
  std::size_t peak = q_lo;
  for (std::size_t q = q_lo; q <= q_hi; ++q) {
    const double dq = static_cast<double>(q) - mean_q;
    sqq += dq * dq;
    sqc += dq * (depth[q] - mean_c);
    if (depth[q] > depth[peak]) peak = q;
  }
  const double slope = sqc / sqq;
  const double line = mean_c + slope * (static_cast<double>(peak) - mean_q);
  return depth[peak] - line;
}

double cpp(const AudioClip& clip, const CppOptions& options) {
  const int rate = clip.sample_rate;
  const std::size_t frame_len = seconds_to_samples(options.frame_length, rate);
  const std::size_t hop = std::max<std::size_t>(1, seconds_to_samples(options.hop, rate));
  const std::size_t count = frame_count(clip.samples.size(), frame_len, hop);
  if (count == 0) throw ValidationError("clip shorter than one analysis frame");
  const auto window = hann_window(frame_len);
  std::vector<double> windowed(frame_len);
  double acc = 0.0;
  std::size_t used = 0;
  for (std::size_t f = 0; f < count; ++f) {
    const std::span<const double> raw(clip.samples.data() + f * hop, frame_len);
    if (frame_rms(raw) < options.silence_threshold) continue;
    for (std::size_t i = 0; i < frame_len; ++i) windowed[i] = raw[i] * window[i];
    acc += cpp_frame(windowed, rate, options);
    ++used;
  }
  if (used == 0) throw InsufficientDataError("no frames above silence gate");
  return acc / static_cast<double>(used);
}

double scalarize(std::span<const double> series) {
  if (series.empty()) throw ValidationError("cannot scalarize an empty series");
  double acc = 0.0;
  for (double v : series) {
    if (!std::isfinite(v)) throw ValidationError("non-finite value in series");
    acc += v;
  }
  return acc / static_cast<double>(series.size());
}

FeatureBundle compute_features(const AudioClip& clip, const FeatureOptions& options) {
  FeatureBundle bundle;
  bundle.utterance_id = clip.source_id;
  auto attempt = [&bundle](Feature f, auto&& fn) {
    try {
      const double v = fn();
      if (!std::isfinite(v)) {
        bundle.errors[static_cast<std::size_t>(f)] = "non-finite result";
        return;
      }
      bundle[f] = v;
    } catch (const ValidationError& e) {
      bundle.errors[static_cast<std::size_t>(f)] = e.what();
    }
  };

  bool have_track = false;
  try {
    bundle.track = estimate_pitch_track(clip, options.pitch);
    have_track = true;
  } catch (const ValidationError& e) {
    for (Feature f : {Feature::kShimmer, Feature::kJitter, Feature::kSigmaF0,
                      Feature::kVoicingRatio, Feature::kHnr}) {
      bundle.errors[static_cast<std::size_t>(f)] = e.what();
    }
  }
  if (have_track) {
    const CycleSeries cycles = extract_cycles(clip, bundle.track, options.pitch);
    attempt(Feature::kShimmer, [&] { return shimmer(cycles); });
    attempt(Feature::kJitter, [&] { return jitter(cycles); });
    attempt(Feature::kSigmaF0, [&] { return sigma_f0(bundle.track); });
    attempt(Feature::kVoicingRatio, [&] { return voicing_ratio(bundle.track); });
    attempt(Feature::kHnr, [&] { return hnr(clip, bundle.track); });
  }
  attempt(Feature::kWadaSnr, [&] { return wada_snr(clip); });
  attempt(Feature::kCpp, [&] { return cpp(clip, options.cpp); });
  bundle.errors[static_cast<std::size_t>(Feature::kSpeechLmPpl)] = "no language model";
  return bundle;
}

}  // namespace sevscore
