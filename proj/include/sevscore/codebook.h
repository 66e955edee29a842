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

#ifndef SEVSCORE_CODEBOOK_H_
#define SEVSCORE_CODEBOOK_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sevscore/frame_matrix.h"

namespace sevscore {

// K centroids over dim-dimensional frame embeddings.
struct Codebook {
  std::size_t k = 0;
  std::size_t dim = 0;
  std::vector<double> centroids;  // k x dim, row-major
  std::uint64_t seed = 0;
  std::string source_tag;         // embedding front-end, e.g. "mfcc13"
  std::uint64_t config_hash = 0;

  std::span<const double> centroid(std::size_t i) const {
    return {centroids.data() + i * dim, dim};
  }

  friend bool operator==(const Codebook&, const Codebook&) = default;
};

struct KMeansOptions {
  std::size_t k = 100;
  std::uint64_t seed = 0;
  std::size_t max_iters = 100;
  // Stop when the relative inertia decrease falls to or below this.
  double tol = 1e-6;
};

struct KMeansResult {
  Codebook codebook;
  // Inertia (sum of squared distances to the nearest centroid) after the
  // initial assignment and after each Lloyd iteration.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
};

// k-means++ seeding followed by Lloyd iterations over all rows of all
// matrices, in input order. Empty clusters are re-seeded with the point
// farthest from its current centroid. Deterministic for a fixed seed and
// input order. Throws ValidationError for fewer points than k, mismatched
// dimensions, non-finite input, or fewer distinct points than k.
KMeansResult train_codebook(std::span<const FrameMatrix> frames,
                            const KMeansOptions& options);

// Discrete acoustic units in [0, K).
struct UnitSequence {
  std::vector<std::uint32_t> units;
  std::string utterance_id;
  bool deduplicated = false;
};

// Index of the nearest centroid by squared Euclidean distance; ties go to the
// lowest index.
std::uint32_t nearest_centroid(const Codebook& cb, std::span<const double> point);
std::uint32_t nearest_centroid(const Codebook& cb, std::span<const float> point);

// Throws ValidationError("dimensionality mismatch") if m.dim != cb.dim.
UnitSequence encode_units(const FrameMatrix& m, const Codebook& cb, bool dedup);

// Collapses runs of equal adjacent units.
std::vector<std::uint32_t> collapse_repeats(std::span<const std::uint32_t> units);

// Sum over rows of squared distance to the nearest centroid.
double inertia(std::span<const FrameMatrix> frames, const Codebook& cb);

// "UCBK" binary: magic, version u32, k u32, dim u32, seed u64, config_hash
// u64, tag length u32, tag bytes, k*dim float64; little-endian.
std::vector<std::uint8_t> encode_codebook(const Codebook& cb);
Codebook decode_codebook(std::span<const std::uint8_t> bytes);
void write_codebook(const Codebook& cb, const std::filesystem::path& path);
Codebook read_codebook(const std::filesystem::path& path);

}  // namespace sevscore

#endif  // SEVSCORE_CODEBOOK_H_
