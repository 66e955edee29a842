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

#ifndef SEVSCORE_PITCH_H_
#define SEVSCORE_PITCH_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "sevscore/audio.h"

namespace sevscore {

struct PitchOptions {
  double f0_min = 75.0;   // Hz
  double f0_max = 500.0;  // Hz
  double hop = 0.010;     // seconds
  // Minimum window-normalized autocorrelation peak for a voiced frame.
  double voicing_threshold = 0.45;
  // Minimum frame RMS (full scale = 1) for a voiced frame.
  double silence_threshold = 0.01;
  // Consecutive periods whose ratio exceeds this are treated as octave errors.
  double octave_ratio = 1.3;

  // Throws ValidationError unless 50 <= f0_min < f0_max <= 600 and the
  // thresholds are sane.
  void validate() const;
};

// Per-frame F0 with voiced/unvoiced decisions. f0 is 0 on unvoiced frames.
struct PitchTrack {
  std::vector<double> times;     // frame centers, seconds
  std::vector<double> f0;        // Hz
  std::vector<bool> voiced;
  std::vector<double> strength;  // autocorrelation peak at the chosen lag
  double frame_hop = 0.0;        // seconds
  double frame_length = 0.0;     // seconds
  int sample_rate = kCanonicalSampleRate;

  std::size_t size() const { return times.size(); }
  std::size_t voiced_count() const;
};

// Per-cycle periods T_i (seconds) and peak amplitudes A_i. Cycles from
// separate voiced stretches are concatenated; within one stretch,
// periods[j] is the spacing between peaks j and j+1.
struct CycleSeries {
  std::vector<double> periods;
  std::vector<double> amplitudes;
  std::vector<double> peak_times;  // seconds, one per amplitude

  bool empty() const { return amplitudes.empty(); }
};

// Window-normalized autocorrelation pitch analysis: frames of 3/f0_min
// seconds every hop; each frame is mean-removed, Hann-windowed, its
// autocorrelation normalized by lag 0 and divided by the window's own
// normalized autocorrelation. The best lag in [1/f0_max, 1/f0_min] gives f0.
// Throws ValidationError when the clip is shorter than one analysis frame.
PitchTrack estimate_pitch_track(const AudioClip& clip,
                                const PitchOptions& options = {});

// Window-normalized autocorrelation of one analysis frame at a single lag
// (in samples). Returns 0 for an all-zero frame.
double normalized_autocorrelation(std::span<const double> frame, std::size_t lag);

// Peak picking on |signal| inside voiced stretches, one search window of
// width 1/f0 per expected pulse. Peak positions and heights are refined by
// parabolic interpolation. Period pairs with ratio > octave_ratio, and periods
// outside [1/(octave_ratio*f0_max), octave_ratio/f0_min], are discarded.
CycleSeries extract_cycles(const AudioClip& clip, const PitchTrack& track,
                           const PitchOptions& options = {});

// time,f0,voiced rows for debugging.
void write_pitch_csv(const PitchTrack& track, const std::filesystem::path& path);

}  // namespace sevscore

#endif  // SEVSCORE_PITCH_H_
