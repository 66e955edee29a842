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

#ifndef SEVSCORE_AUDIO_H_
#define SEVSCORE_AUDIO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace sevscore {

inline constexpr int kCanonicalSampleRate = 16000;

// Mono samples in [-1, 1) at a fixed rate.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = kCanonicalSampleRate;
  std::string source_id;

  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads a mono 16- or 24-bit PCM WAV file and resamples it to target_rate.
// Throws IoError when the file cannot be read and ValidationError for
// unsupported encodings, multi-channel input or zero-length audio.
AudioClip load_audio(const std::filesystem::path& path,
                     int target_rate = kCanonicalSampleRate);

// Same as load_audio but decodes an in-memory RIFF/WAVE image.
AudioClip decode_wav(std::span<const std::uint8_t> bytes, int target_rate,
                     std::string source_id = {});

// Writes samples as 16-bit PCM mono. Samples are clipped to the 16-bit range.
void write_wav16(const std::filesystem::path& path,
                 std::span<const double> samples, int sample_rate);

// Encodes samples as mono PCM with the given bit depth (16 or 24).
std::vector<std::uint8_t> encode_wav(std::span<const double> samples,
                                     int sample_rate, int bits_per_sample,
                                     int channels = 1);

// Kaiser-windowed sinc polyphase resampler. Output has
// floor(n * out_rate / in_rate) samples and no group delay.
std::vector<double> resample(std::span<const double> input, int in_rate,
                             int out_rate);

enum class Window { kRectangular, kHann };

// Symmetric Hann window of the given length.
std::vector<double> hann_window(std::size_t length);

// Frames stored contiguously, one row per frame.
class FrameBlock {
 public:
  FrameBlock(std::size_t frame_length, std::size_t hop_length,
             std::vector<double> data)
      : frame_length_(frame_length),
        hop_length_(hop_length),
        data_(std::move(data)) {}

  std::size_t size() const { return data_.size() / frame_length_; }
  std::size_t frame_length() const { return frame_length_; }
  std::size_t hop_length() const { return hop_length_; }
  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * frame_length_, frame_length_};
  }

 private:
  std::size_t frame_length_;
  std::size_t hop_length_;
  std::vector<double> data_;
};

// Number of complete frames: floor((n - frame) / hop) + 1, or 0 when the
// signal is shorter than one frame.
std::size_t frame_count(std::size_t n_samples, std::size_t frame_length,
                        std::size_t hop_length);

// Cuts the clip into overlapping frames of frame_len seconds every hop
// seconds, each multiplied by the window. Throws ValidationError when
// the clip is shorter than one frame or hop > frame_len.
FrameBlock frame_signal(const AudioClip& clip, double frame_len, double hop,
                        Window window);

// Seconds to a whole number of samples at the given rate.
std::size_t seconds_to_samples(double seconds, int sample_rate);

}  // namespace sevscore

#endif  // SEVSCORE_AUDIO_H_
