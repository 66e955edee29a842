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

#include "sevscore/mfcc.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

constexpr double kLogFloor = 1e-30;

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// filters x bins weight matrix, row-major.
std::vector<double> mel_filterbank(int n_filters, std::size_t fft_size,
                                   int sample_rate, double low_hz, double high_hz) {
  const std::size_t bins = fft_size / 2 + 1;
  const double lo = hz_to_mel(low_hz);
  const double hi = hz_to_mel(high_hz);
  std::vector<double> edges(n_filters + 2);
  for (int i = 0; i < n_filters + 2; ++i) {
    edges[i] = mel_to_hz(lo + (hi - lo) * i / (n_filters + 1));
  }
  std::vector<double> weights(n_filters * bins, 0.0);
  for (int f = 0; f < n_filters; ++f) {
    const double left = edges[f], center = edges[f + 1], right = edges[f + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double hz = static_cast<double>(k) * sample_rate / fft_size;
      double w = 0.0;
      if (hz > left && hz <= center) {
        w = (hz - left) / (center - left);
      } else if (hz > center && hz < right) {
        w = (right - hz) / (right - center);
      }
      weights[f * bins + k] = w;
    }
  }
  return weights;
}

}  // namespace

FrameMatrix compute_mfcc(const AudioClip& clip, const MfccOptions& options) {
  if (options.n_coeffs < 8 || options.n_coeffs > 40) {
    throw ValidationError("n_coeffs must be in [8, 40]");
  }
  if (options.n_coeffs > options.n_mel_filters) {
    throw ValidationError("n_coeffs exceeds mel filter count");
  }
  const FrameBlock frames =
      frame_signal(clip, options.frame_length, options.hop, Window::kHann);
  std::size_t fft_size = 1;
  while (fft_size < frames.frame_length()) fft_size *= 2;
  const std::size_t bins = fft_size / 2 + 1;
  const int n_filters = options.n_mel_filters;
  const auto filters = mel_filterbank(n_filters, fft_size, clip.sample_rate,
                                      options.low_hz, options.high_hz);

  const int n_coeffs = options.n_coeffs;
  std::vector<double> dct(static_cast<std::size_t>(n_coeffs) * n_filters);
  for (int k = 0; k < n_coeffs; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n_filters);
    for (int m = 0; m < n_filters; ++m) {
      dct[k * n_filters + m] =
          scale * std::cos(std::numbers::pi * k * (m + 0.5) / n_filters);
    }
  }

  internal::RealFft fft(fft_size);
  FrameMatrix out;
  out.n_frames = frames.size();
  out.dim = static_cast<std::size_t>(n_coeffs);
  out.hop = static_cast<double>(frames.hop_length()) / clip.sample_rate;
  out.values.resize(out.n_frames * out.dim);

  std::vector<double> power(bins);
  std::vector<double> log_mel(n_filters);
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const auto spectrum = fft.forward(frames[f]);
    for (std::size_t k = 0; k < bins; ++k) power[k] = std::norm(spectrum[k]);
    for (int m = 0; m < n_filters; ++m) {
      double e = 0.0;
      const double* w = filters.data() + m * bins;
      for (std::size_t k = 0; k < bins; ++k) e += w[k] * power[k];
      log_mel[m] = std::log(std::max(e, kLogFloor));
    }
    auto row = out.row(f);
    for (int k = 0; k < n_coeffs; ++k) {
      double c = 0.0;
      for (int m = 0; m < n_filters; ++m) c += dct[k * n_filters + m] * log_mel[m];
      row[k] = static_cast<float>(c);
    }
  }
  return out;
}

}  // namespace sevscore
