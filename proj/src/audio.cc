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

#include "sevscore/audio.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "byte_io.h"
#include "sevscore/error.h"

namespace sevscore {
namespace internal {

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace internal

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct WavFormat {
  std::uint16_t format_tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

double max_below_one() { return std::nextafter(1.0, 0.0); }

}  // namespace

AudioClip decode_wav(std::span<const std::uint8_t> bytes, int target_rate,
                     std::string source_id) {
  if (target_rate <= 0) throw ValidationError("target rate must be positive");
  internal::ByteReader reader(bytes, "wav");
  auto tag = [&reader] {
    auto b = reader.get_bytes(4);
    return std::string(b.begin(), b.end());
  };
  if (bytes.size() < 12 || tag() != "RIFF") {
    throw ValidationError("not a RIFF/WAVE file");
  }
  reader.get_uint<std::uint32_t>();
  if (tag() != "WAVE") throw ValidationError("not a RIFF/WAVE file");

  WavFormat fmt;
  bool have_fmt = false;
  std::span<const std::uint8_t> data;
  bool have_data = false;
  while (reader.remaining() >= 8 && !have_data) {
    const std::string id = tag();
    const std::uint32_t size = reader.get_uint<std::uint32_t>();
    if (id == "fmt ") {
      auto chunk = reader.get_bytes(size);
      internal::ByteReader fr(chunk, "wav fmt chunk");
      fmt.format_tag = fr.get_uint<std::uint16_t>();
      fmt.channels = fr.get_uint<std::uint16_t>();
      fmt.sample_rate = fr.get_uint<std::uint32_t>();
      fr.get_uint<std::uint32_t>();  // byte rate
      fr.get_uint<std::uint16_t>();  // block align
      fmt.bits_per_sample = fr.get_uint<std::uint16_t>();
      if (fmt.format_tag == kFormatExtensible && fr.remaining() >= 10) {
        fr.get_uint<std::uint16_t>();  // cbSize
        fr.get_uint<std::uint16_t>();  // valid bits
        fr.get_uint<std::uint32_t>();  // channel mask
        fmt.format_tag = fr.get_uint<std::uint16_t>();  // sub-format GUID head
      }
      have_fmt = true;
    } else if (id == "data") {
      // Streaming writers sometimes leave an oversized length; keep what exists.
      data = reader.get_bytes(std::min<std::size_t>(size, reader.remaining()));
      have_data = true;
    } else {
      reader.get_bytes(std::min<std::size_t>(size, reader.remaining()));
    }
    if (size % 2 == 1 && reader.remaining() > 0 && !have_data) {
      reader.get_bytes(1);
    }
  }
  if (!have_fmt) throw ValidationError("wav: missing fmt chunk");
  if (!have_data) throw ValidationError("wav: missing data chunk");
  if (fmt.format_tag != kFormatPcm) {
    throw ValidationError("unsupported wav encoding: non-PCM");
  }
  if (fmt.bits_per_sample != 16 && fmt.bits_per_sample != 24) {
    throw ValidationError("unsupported bit depth: " +
                          std::to_string(fmt.bits_per_sample));
  }
  if (fmt.channels != 1) throw ValidationError("multi-channel unsupported");
  if (fmt.sample_rate == 0) throw ValidationError("wav: zero sample rate");

  const std::size_t width = fmt.bits_per_sample / 8;
  const std::size_t n = data.size() / width;
  if (n == 0) throw ValidationError("zero-length audio");

  std::vector<double> samples(n);
  if (width == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::int16_t>(data[2 * i] | (data[2 * i + 1] << 8));
      samples[i] = v / 32768.0;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::int32_t v = data[3 * i] | (data[3 * i + 1] << 8) | (data[3 * i + 2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      samples[i] = v / 8388608.0;
    }
  }

  AudioClip clip;
  clip.source_id = std::move(source_id);
  clip.sample_rate = target_rate;
  if (static_cast<int>(fmt.sample_rate) == target_rate) {
    clip.samples = std::move(samples);
  } else {
    clip.samples = resample(samples, static_cast<int>(fmt.sample_rate), target_rate);
    const double hi = max_below_one();
    for (double& s : clip.samples) s = std::clamp(s, -1.0, hi);
    if (clip.samples.empty()) throw ValidationError("zero-length audio");
  }
  return clip;
}

AudioClip load_audio(const std::filesystem::path& path, int target_rate) {
  if (!std::filesystem::exists(path)) {
    throw IoError("missing file: " + path.string());
  }
  const auto bytes = internal::read_file_bytes(path);
  try {
    return decode_wav(bytes, target_rate, path.stem().string());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_wav(std::span<const double> samples,
                                     int sample_rate, int bits_per_sample,
                                     int channels) {
  if (bits_per_sample != 16 && bits_per_sample != 24) {
    throw ValidationError("encode_wav supports 16 or 24 bits");
  }
  const std::uint32_t width = static_cast<std::uint32_t>(bits_per_sample) / 8;
  const auto data_size = static_cast<std::uint32_t>(samples.size() * width);
  internal::ByteWriter w;
  w.put_bytes("RIFF");
  w.put_uint<std::uint32_t>(36 + data_size);
  w.put_bytes("WAVE");
  w.put_bytes("fmt ");
  w.put_uint<std::uint32_t>(16);
  w.put_uint<std::uint16_t>(kFormatPcm);
  w.put_uint<std::uint16_t>(static_cast<std::uint16_t>(channels));
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(sample_rate));
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(sample_rate) * width * channels);
  w.put_uint<std::uint16_t>(static_cast<std::uint16_t>(width * channels));
  w.put_uint<std::uint16_t>(static_cast<std::uint16_t>(bits_per_sample));
  w.put_bytes("data");
  w.put_uint<std::uint32_t>(data_size);
  const double full_scale = bits_per_sample == 16 ? 32768.0 : 8388608.0;
  for (double s : samples) {
    const double scaled = std::round(s * full_scale);
    const auto v = static_cast<std::int32_t>(
        std::clamp(scaled, -full_scale, full_scale - 1.0));
    if (bits_per_sample == 16) {
      w.put_uint<std::uint16_t>(static_cast<std::uint16_t>(v & 0xFFFF));
    } else {
      const auto u = static_cast<std::uint32_t>(v) & 0xFFFFFF;
      w.put_uint<std::uint8_t>(u & 0xFF);
      w.put_uint<std::uint8_t>((u >> 8) & 0xFF);
      w.put_uint<std::uint8_t>((u >> 16) & 0xFF);
    }
  }
  return w.take();
}

void write_wav16(const std::filesystem::path& path,
                 std::span<const double> samples, int sample_rate) {
  internal::write_file_bytes(path, encode_wav(samples, sample_rate, 16));
}

std::vector<double> hann_window(std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (length < 2) return w;
  const double denom = static_cast<double>(length - 1);
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / denom);
  }
  return w;
}

std::size_t seconds_to_samples(double seconds, int sample_rate) {
  return static_cast<std::size_t>(std::llround(seconds * sample_rate));
}

std::size_t frame_count(std::size_t n_samples, std::size_t frame_length,
                        std::size_t hop_length) {
  if (frame_length == 0 || hop_length == 0 || n_samples < frame_length) return 0;
  return (n_samples - frame_length) / hop_length + 1;
}

FrameBlock frame_signal(const AudioClip& clip, double frame_len, double hop,
                        Window window) {
  if (!(hop > 0.0) || frame_len < hop) {
    throw ValidationError("frame_signal requires frame_len >= hop > 0");
  }
  const std::size_t flen = seconds_to_samples(frame_len, clip.sample_rate);
  const std::size_t hlen = std::max<std::size_t>(1, seconds_to_samples(hop, clip.sample_rate));
  const std::size_t count = frame_count(clip.samples.size(), flen, hlen);
  if (count == 0) throw ValidationError("clip shorter than one frame");

  const std::vector<double> win =
      window == Window::kHann ? hann_window(flen) : std::vector<double>(flen, 1.0);
  std::vector<double> data(count * flen);
  for (std::size_t f = 0; f < count; ++f) {
    const double* src = clip.samples.data() + f * hlen;
    double* dst = data.data() + f * flen;
    for (std::size_t i = 0; i < flen; ++i) dst[i] = src[i] * win[i];
  }
  return FrameBlock(flen, hlen, std::move(data));
}

}  // namespace sevscore
