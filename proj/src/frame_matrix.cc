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

#include "sevscore/frame_matrix.h"

#include <cmath>
#include <limits>
#include <string>

#include "byte_io.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

void validate_shape(const FrameMatrix& m) {
  if (m.dim == 0) throw ValidationError("frame matrix: dim = 0");
  if (m.dim > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("frame matrix: dim too large");
  }
  if (m.values.size() != m.n_frames * m.dim) {
    throw ValidationError("frame matrix: value count does not match shape");
  }
  if (!(m.hop >= 0.0) || m.hop * 1e6 > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("frame matrix: hop out of range");
  }
}

}  // namespace

std::vector<std::uint8_t> encode_frame_matrix(const FrameMatrix& m) {
  validate_shape(m);
  internal::ByteWriter w;
  w.put_bytes("FMTX");
  w.put_uint<std::uint32_t>(kFrameMatrixVersion);
  w.put_uint<std::uint64_t>(m.n_frames);
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(m.dim));
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(std::llround(m.hop * 1e6)));
  for (float v : m.values) w.put_f32(v);
  return w.take();
}

FrameMatrix decode_frame_matrix(std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes, "frame matrix");
  const auto magic = r.get_bytes(4);
  if (std::string(magic.begin(), magic.end()) != "FMTX") {
    throw ValidationError("frame matrix: bad magic");
  }
  const auto version = r.get_uint<std::uint32_t>();
  if (version != kFrameMatrixVersion) {
    throw ValidationError("frame matrix: version mismatch (got " +
                          std::to_string(version) + ")");
  }
  FrameMatrix m;
  const auto n_frames = r.get_uint<std::uint64_t>();
  m.dim = r.get_uint<std::uint32_t>();
  m.hop = r.get_uint<std::uint32_t>() / 1e6;
  if (m.dim == 0) throw ValidationError("frame matrix: dim = 0");
  if (n_frames > r.remaining() / 4 / m.dim) {
    throw ValidationError("frame matrix: truncated payload");
  }
  m.n_frames = static_cast<std::size_t>(n_frames);
  const std::size_t count = m.n_frames * m.dim;
  if (r.remaining() != count * 4) {
    throw ValidationError("frame matrix: trailing data after payload");
  }
  m.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    m.values[i] = r.get_f32();
    if (!std::isfinite(m.values[i])) {
      throw ValidationError("frame matrix: non-finite value at index " +
                            std::to_string(i));
    }
  }
  return m;
}

void write_frame_matrix(const FrameMatrix& m, const std::filesystem::path& path) {
  internal::write_file_bytes(path, encode_frame_matrix(m));
}

FrameMatrix read_frame_matrix(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError("missing file: " + path.string());
  try {
    return decode_frame_matrix(internal::read_file_bytes(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void normalize_frames(FrameMatrix& m) {
  if (m.n_frames == 0) return;
  for (std::size_t d = 0; d < m.dim; ++d) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m.n_frames; ++i) mean += m.values[i * m.dim + d];
    mean /= static_cast<double>(m.n_frames);
    double var = 0.0;
    for (std::size_t i = 0; i < m.n_frames; ++i) {
      const double c = m.values[i * m.dim + d] - mean;
      var += c * c;
    }
    var /= static_cast<double>(m.n_frames);
    const double scale = var > 0.0 ? 1.0 / std::sqrt(var) : 1.0;
    for (std::size_t i = 0; i < m.n_frames; ++i) {
      auto& v = m.values[i * m.dim + d];
      v = static_cast<float>((v - mean) * scale);
    }
  }
}

}  // namespace sevscore
