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

#ifndef SEVSCORE_FRAME_MATRIX_H_
#define SEVSCORE_FRAME_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace sevscore {

// Frame embeddings h_t, one row per frame, row-major.
struct FrameMatrix {
  std::size_t n_frames = 0;
  std::size_t dim = 0;
  double hop = 0.0;  // seconds between frames
  std::vector<float> values;

  std::span<const float> row(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
  std::span<float> row(std::size_t i) { return {values.data() + i * dim, dim}; }

  friend bool operator==(const FrameMatrix&, const FrameMatrix&) = default;
};

// FMTX interchange format, all fields little-endian:
//   0..3   magic "FMTX"
//   4..7   version (u32) = 1
//   8..15  n_frames (u64)
//   16..19 dim (u32)
//   20..23 hop in microseconds (u32)
//   24..   n_frames * dim float32, row-major; no trailing bytes.
inline constexpr std::uint32_t kFrameMatrixVersion = 1;

std::vector<std::uint8_t> encode_frame_matrix(const FrameMatrix& m);
FrameMatrix decode_frame_matrix(std::span<const std::uint8_t> bytes);

void write_frame_matrix(const FrameMatrix& m, const std::filesystem::path& path);
FrameMatrix read_frame_matrix(const std::filesystem::path& path);

// Per-utterance mean and variance normalization of every dimension. Constant
// dimensions are only centered.
void normalize_frames(FrameMatrix& m);

}  // namespace sevscore

#endif  // SEVSCORE_FRAME_MATRIX_H_
