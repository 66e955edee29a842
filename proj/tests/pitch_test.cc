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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "sevscore/error.h"
#include "synth.h"

namespace sevscore {
namespace {

using testing::clip_of;

double voiced_fraction(const PitchTrack& t) {
  return static_cast<double>(t.voiced_count()) / static_cast<double>(t.size());
}

double median_voiced_f0(const PitchTrack& t) {
  std::vector<double> f;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.voiced[i]) f.push_back(t.f0[i]);
  }
  std::nth_element(f.begin(), f.begin() + f.size() / 2, f.end());
  return f[f.size() / 2];
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sd(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

AudioClip voice(double jitter_sd, std::uint64_t seed, double gain = 1.0) {
  testing::VoiceSpec spec;
  spec.period_perturbation = jitter_sd;
  spec.seed = seed;
  auto x = testing::synth_voice(spec);
  for (auto& v : x) v *= gain;
  return clip_of(std::move(x));
}

TEST(PitchTrack, PureSine200Hz) {
  const PitchTrack t = estimate_pitch_track(clip_of(testing::sine(200.0, 0.5, 1.0)));
  EXPECT_GE(voiced_fraction(t), 0.95);
  const double m = median_voiced_f0(t);
  EXPECT_GE(m, 198.0);
  EXPECT_LE(m, 202.0);
}

TEST(PitchTrack, WhiteNoiseMostlyUnvoiced) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<double> x(16000);
  for (auto& v : x) v = u(rng);
  EXPECT_LE(voiced_fraction(estimate_pitch_track(clip_of(x))), 0.20);
}

TEST(PitchTrack, SilenceIsUnvoiced) {
  const PitchTrack t = estimate_pitch_track(clip_of(std::vector<double>(16000, 0.0)));
  EXPECT_EQ(t.voiced_count(), 0u);
  for (double f : t.f0) EXPECT_EQ(f, 0.0);
}

TEST(PitchTrack, ShorterThanOneFrameFails) {
  EXPECT_THROW(estimate_pitch_track(clip_of(std::vector<double>(600, 0.1))), ValidationError);
}

TEST(PitchTrack, InvalidBoundsRejected) {
  PitchOptions o;
  o.f0_min = 40.0;
  EXPECT_THROW(estimate_pitch_track(clip_of(testing::sine(200.0, 0.5, 1.0)), o), ValidationError);
  o.f0_min = 300.0;
  o.f0_max = 200.0;
  EXPECT_THROW(o.validate(), ValidationError);
}

TEST(PitchTrack, ShapeInvariants) {
  const PitchTrack t = estimate_pitch_track(voice(0.01, 4));
  ASSERT_EQ(t.times.size(), t.f0.size());
  ASSERT_EQ(t.times.size(), t.voiced.size());
  EXPECT_DOUBLE_EQ(t.frame_hop, 0.010);
  EXPECT_NEAR(t.frame_length, 3.0 / 75.0, 1e-12);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t.times[i], t.times[i - 1]);
}

TEST(PitchTrackProperty, VoicedF0WithinBounds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    testing::VoiceSpec spec;
    spec.f0 = std::uniform_real_distribution<double>(90.0, 400.0)(rng);
    spec.period_perturbation = 0.02;
    spec.amplitude_perturbation = 0.1;
    spec.snr_db = 15.0;
    spec.seed = rng();
    PitchOptions o;
    o.f0_min = std::uniform_real_distribution<double>(60.0, 100.0)(rng);
    o.f0_max = std::uniform_real_distribution<double>(300.0, 600.0)(rng);
    const AudioClip clip = clip_of(testing::synth_voice(spec));
    const PitchTrack t = estimate_pitch_track(clip, o);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t.voiced[i]) continue;
      EXPECT_GE(t.f0[i], o.f0_min);
      EXPECT_LE(t.f0[i], o.f0_max);
    }
    const CycleSeries c = extract_cycles(clip, t, o);
    for (double p : c.periods) {
      EXPECT_GE(p, 1.0 / o.f0_max / o.octave_ratio - 1e-12);
      EXPECT_LE(p, o.octave_ratio / o.f0_min + 1e-12);
    }
  }
}

TEST(PitchTrackProperty, AmplitudeScalingInvariance) {
  const AudioClip base = voice(0.01, 8);
  const PitchTrack t0 = estimate_pitch_track(base);
  const CycleSeries c0 = extract_cycles(base, t0);
  for (double c : {0.4, 0.7, 0.9}) {
    const AudioClip scaled = voice(0.01, 8, c);
    const PitchTrack t = estimate_pitch_track(scaled);
    ASSERT_EQ(t.voiced, t0.voiced) << c;
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(t.f0[i], t0.f0[i], 1e-9);
    const CycleSeries cs = extract_cycles(scaled, t);
    ASSERT_EQ(cs.amplitudes.size(), c0.amplitudes.size());
    for (std::size_t i = 0; i < cs.amplitudes.size(); ++i) {
      EXPECT_NEAR(cs.amplitudes[i], c * c0.amplitudes[i], 1e-9);
    }
  }
}

TEST(Cycles, ImpulseTrain100Hz) {
  const AudioClip clip = clip_of(testing::impulse_train(100.0, 0.5));
  const PitchTrack t = estimate_pitch_track(clip);
  const CycleSeries c = extract_cycles(clip, t);
  ASSERT_GE(c.periods.size(), 30u);
  for (double p : c.periods) {
    EXPECT_GE(p, 0.0098);
    EXPECT_LE(p, 0.0102);
  }
  for (double a : c.amplitudes) EXPECT_NEAR(a, 1.0, 1e-9);
}

TEST(Cycles, AlternatingAmplitudes) {
  auto x = testing::impulse_train(100.0, 0.5);
  bool loud = true;
  for (auto& v : x) {
    if (v != 0.0) {
      v = loud ? 1.0 : 0.5;
      loud = !loud;
    }
  }
  const AudioClip clip = clip_of(x);
  const CycleSeries c = extract_cycles(clip, estimate_pitch_track(clip));
  ASSERT_GE(c.amplitudes.size(), 20u);
  for (std::size_t i = 1; i < c.amplitudes.size(); ++i) {
    const double hi = std::max(c.amplitudes[i], c.amplitudes[i - 1]);
    const double lo = std::min(c.amplitudes[i], c.amplitudes[i - 1]);
    EXPECT_NEAR(hi, 1.0, 1e-9);
    EXPECT_NEAR(lo, 0.5, 1e-9);
  }
}

TEST(Cycles, UnvoicedClipIsEmpty) {
  const AudioClip clip = clip_of(std::vector<double>(8000, 0.0));
  const CycleSeries c = extract_cycles(clip, estimate_pitch_track(clip));
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(c.periods.empty());
}

TEST(Cycles, TimeShiftRobustness) {
  const AudioClip a = voice(0.01, 12);
  std::vector<double> shifted(160, 0.0);
  shifted.insert(shifted.end(), a.samples.begin(), a.samples.end());
  const AudioClip b = clip_of(shifted);
  const CycleSeries ca = extract_cycles(a, estimate_pitch_track(a));
  const CycleSeries cb = extract_cycles(b, estimate_pitch_track(b));
  ASSERT_GT(ca.periods.size(), 50u);
  EXPECT_NEAR(mean(cb.periods), mean(ca.periods), 0.01 * mean(ca.periods));
  EXPECT_NEAR(sd(cb.periods), sd(ca.periods), 0.01 * sd(ca.periods) + 1e-9);
  std::size_t matched = 0;
  for (double t : ca.peak_times) {
    for (double u : cb.peak_times) {
      if (std::abs(u - (t + 0.010)) <= 1.0 / 16000 + 1e-12) {
        ++matched;
        break;
      }
    }
  }
  EXPECT_GE(matched, ca.peak_times.size() * 9 / 10);
}

TEST(PitchCsv, HeaderAndRows) {
  const PitchTrack t = estimate_pitch_track(clip_of(testing::sine(200.0, 0.5, 0.2)));
  const auto path = std::filesystem::temp_directory_path() / "sevscore_pitch.csv";
  write_pitch_csv(t, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "time,f0,voiced");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, t.size());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace sevscore
