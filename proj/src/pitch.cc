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

#include "sevscore/pitch.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "fft.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

struct LagRange {
  std::size_t lo;
  std::size_t hi;
};

LagRange lag_range(const PitchOptions& o, int rate) {
  return {static_cast<std::size_t>(std::ceil(rate / o.f0_max)),
          static_cast<std::size_t>(std::floor(rate / o.f0_min))};
}

std::vector<double> windowed_centered(std::span<const double> frame,
                                      const std::vector<double>& window) {
  double mean = 0.0;
  for (double v : frame) mean += v;
  mean /= static_cast<double>(frame.size());
  std::vector<double> out(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) out[i] = (frame[i] - mean) * window[i];
  return out;
}

double lag_product(std::span<const double> x, std::size_t lag) {
  double acc = 0.0;
  for (std::size_t i = 0; i + lag < x.size(); ++i) acc += x[i] * x[i + lag];
  return acc;
}

double rms(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

struct Peak {
  double position;  // samples, refined
  double height;    // |x| at the refined position
};

Peak refine_peak(std::span<const double> x, std::size_t p) {
  const double y0 = std::abs(x[p]);
  if (p == 0 || p + 1 >= x.size()) return {static_cast<double>(p), y0};
  const double ym = std::abs(x[p - 1]);
  const double yp = std::abs(x[p + 1]);
  const double denom = ym - 2.0 * y0 + yp;
  if (!(denom < 0.0)) return {static_cast<double>(p), y0};
  const double delta = std::clamp(0.5 * (ym - yp) / denom, -0.5, 0.5);
  return {static_cast<double>(p) + delta, y0 - 0.25 * (ym - yp) * delta};
}

// Strict maximum of |x| over [lo, hi], scanning outward from center so that
// ties resolve toward the expected position.
std::size_t outward_argmax(std::span<const double> x, std::size_t lo,
                           std::size_t hi, std::size_t center) {
  center = std::clamp(center, lo, hi);
  std::size_t best = center;
  double best_v = std::abs(x[center]);
  for (std::size_t d = 1; center + d <= hi || center >= lo + d; ++d) {
    if (center + d <= hi && std::abs(x[center + d]) > best_v) {
      best = center + d;
      best_v = std::abs(x[best]);
    }
    if (center >= lo + d && std::abs(x[center - d]) > best_v) {
      best = center - d;
      best_v = std::abs(x[best]);
    }
  }
  return best;
}

}  // namespace

void PitchOptions::validate() const {
  if (!(f0_min >= 50.0 && f0_min < f0_max && f0_max <= 600.0)) {
    throw ValidationError("pitch bounds must satisfy 50 <= f0_min < f0_max <= 600");
  }
  if (!(hop > 0.0)) throw ValidationError("pitch hop must be positive");
  if (!(voicing_threshold > 0.0 && voicing_threshold < 1.0)) {
    throw ValidationError("voicing_threshold must be in (0, 1)");
  }
  if (!(silence_threshold >= 0.0)) {
    throw ValidationError("silence_threshold must be non-negative");
  }
  if (!(octave_ratio > 1.0)) throw ValidationError("octave_ratio must exceed 1");
}

std::size_t PitchTrack::voiced_count() const {
  return static_cast<std::size_t>(std::count(voiced.begin(), voiced.end(), true));
}

double normalized_autocorrelation(std::span<const double> frame, std::size_t lag) {
  if (lag >= frame.size()) return 0.0;
  const auto window = hann_window(frame.size());
  const auto x = windowed_centered(frame, window);
  const double r0 = lag_product(x, 0);
  if (r0 <= 0.0) return 0.0;
  const double w_ratio = lag_product(window, lag) / lag_product(window, 0);
  if (w_ratio <= 0.0) return 0.0;
  return lag_product(x, lag) / r0 / w_ratio;
}

PitchTrack estimate_pitch_track(const AudioClip& clip, const PitchOptions& options) {
  options.validate();
  const int rate = clip.sample_rate;
  const std::size_t frame_len = seconds_to_samples(3.0 / options.f0_min, rate);
  const std::size_t hop = std::max<std::size_t>(1, seconds_to_samples(options.hop, rate));
  const std::size_t count = frame_count(clip.samples.size(), frame_len, hop);
  if (count == 0) throw ValidationError("clip shorter than one analysis frame");
  LagRange lags = lag_range(options, rate);
  lags.hi = std::min(lags.hi, frame_len - 1);

  const auto window = hann_window(frame_len);
  std::size_t fft_size = 1;
  while (fft_size < 2 * frame_len) fft_size *= 2;
  internal::RealFft fft(fft_size);

  std::vector<double> window_acf(lags.hi + 1, 0.0);
  const double w0 = lag_product(window, 0);
  for (std::size_t lag = lags.lo; lag <= lags.hi; ++lag) {
    window_acf[lag] = lag_product(window, lag) / w0;
  }

  PitchTrack track;
  track.frame_hop = static_cast<double>(hop) / rate;
  track.frame_length = static_cast<double>(frame_len) / rate;
  track.sample_rate = rate;
  track.times.resize(count);
  track.f0.assign(count, 0.0);
  track.voiced.assign(count, false);
  track.strength.assign(count, 0.0);

  std::vector<std::complex<double>> power(fft_size / 2 + 1);
  for (std::size_t f = 0; f < count; ++f) {
    const std::span<const double> raw(clip.samples.data() + f * hop, frame_len);
    track.times[f] = (static_cast<double>(f * hop) + frame_len / 2.0) / rate;
    const auto x = windowed_centered(raw, window);
    const auto spectrum = fft.forward(x);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = std::norm(spectrum[k]);
    const auto acf = fft.inverse(power);
    const double r0 = acf[0];
    if (!(r0 > 0.0)) continue;

    double best_r = -1.0;
    std::size_t best_lag = lags.lo;
    for (std::size_t lag = lags.lo; lag <= lags.hi; ++lag) {
      const double r = acf[lag] / r0 / window_acf[lag];
      if (r > best_r) {
        best_r = r;
        best_lag = lag;
      }
    }
    track.strength[f] = best_r;
    if (best_r >= options.voicing_threshold && rms(raw) >= options.silence_threshold) {
      track.voiced[f] = true;
      track.f0[f] = static_cast<double>(rate) / best_lag;
    }
  }
  return track;
}

CycleSeries extract_cycles(const AudioClip& clip, const PitchTrack& track,
                           const PitchOptions& options) {
  CycleSeries out;
  const std::size_t n_frames = track.size();
  if (n_frames == 0) return out;
  const std::span<const double> x = clip.samples;
  const double rate = clip.sample_rate;
  const double hop = track.frame_hop;
  const double min_period = 1.0 / (options.octave_ratio * options.f0_max);
  const double max_period = options.octave_ratio / options.f0_min;

  auto to_sample = [&](double t) {
    return static_cast<std::size_t>(
        std::clamp<double>(std::llround(t * rate), 0.0, static_cast<double>(x.size())));
  };

  std::size_t i = 0;
  while (i < n_frames) {
    if (!track.voiced[i]) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (i + 1 < n_frames && track.voiced[i + 1]) ++i;
    const std::size_t last = i;
    ++i;

    const std::size_t start = first == 0 ? 0 : to_sample(track.times[first] - hop / 2);
    const std::size_t end =
        last + 1 == n_frames ? x.size() : to_sample(track.times[last] + hop / 2);
    if (end <= start + 2) continue;

    auto period_at = [&](std::size_t s) {
      const double pos = (s / rate - track.times[0]) / hop;
      const auto frame = static_cast<std::size_t>(std::clamp<double>(
          std::llround(pos), static_cast<double>(first), static_cast<double>(last)));
      return rate / track.f0[frame];
    };

    std::vector<Peak> peaks;
    {
      // Digital silence carries no pulse.
      std::size_t begin = start;
      while (begin < end && x[begin] == 0.0) ++begin;
      if (begin == end) continue;
      const std::size_t stop =
          std::min(end, begin + static_cast<std::size_t>(std::ceil(period_at(begin))));
      std::size_t p = begin;
      for (std::size_t s = begin; s < stop; ++s) {
        if (std::abs(x[s]) > std::abs(x[p])) p = s;
      }
      peaks.push_back(refine_peak(x, p));
      while (true) {
        const double period = period_at(p);
        const double expected = static_cast<double>(p) + period;
        const double hi_edge = std::floor(expected + period / 2);
        if (hi_edge >= static_cast<double>(end)) break;
        const auto lo = std::max(p + 1, static_cast<std::size_t>(
                                            std::ceil(expected - period / 2)));
        const auto hi = static_cast<std::size_t>(hi_edge);
        if (lo > hi) break;
        p = outward_argmax(x, lo, hi, static_cast<std::size_t>(std::llround(expected)));
        if (x[p] == 0.0) break;
        peaks.push_back(refine_peak(x, p));
      }
    }
    if (peaks.size() < 2) continue;

    const std::size_t n_periods = peaks.size() - 1;
    std::vector<double> periods(n_periods);
    std::vector<bool> bad(n_periods, false);
    for (std::size_t j = 0; j < n_periods; ++j) {
      periods[j] = (peaks[j + 1].position - peaks[j].position) / rate;
      if (periods[j] < min_period || periods[j] > max_period) bad[j] = true;
    }
    for (std::size_t j = 0; j + 1 < n_periods; ++j) {
      const double a = periods[j], b = periods[j + 1];
      if (std::max(a, b) / std::min(a, b) > options.octave_ratio) {
        bad[j] = true;
        bad[j + 1] = true;
      }
    }
    // Each maximal stretch of accepted periods contributes its periods and
    // the amplitudes of the peaks bounding them.
    std::size_t j = 0;
    while (j < n_periods) {
      if (bad[j]) {
        ++j;
        continue;
      }
      const std::size_t seg_first = j;
      while (j + 1 < n_periods && !bad[j + 1]) ++j;
      const std::size_t seg_last = j;
      ++j;
      for (std::size_t k = seg_first; k <= seg_last; ++k) out.periods.push_back(periods[k]);
      for (std::size_t k = seg_first; k <= seg_last + 1; ++k) {
        out.amplitudes.push_back(peaks[k].height);
        out.peak_times.push_back(peaks[k].position / rate);
      }
    }
  }
  return out;
}

void write_pitch_csv(const PitchTrack& track, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "time,f0,voiced\n";
  for (std::size_t i = 0; i < track.size(); ++i) {
    out << fmt::format("{},{},{}\n", track.times[i], track.f0[i], track.voiced[i] ? 1 : 0);
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sevscore
