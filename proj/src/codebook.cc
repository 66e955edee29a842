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

#include "sevscore/codebook.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "byte_io.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

constexpr std::uint32_t kCodebookVersion = 1;

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
double squared_distance(std::span<const T> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double d = static_cast<double>(a[i]) - b[i];
    acc += d * d;
  }
  return acc;
}

template <typename T>
std::uint32_t nearest_impl(const Codebook& cb, std::span<const T> point) {
  std::uint32_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cb.k; ++c) {
    const double d = squared_distance(point, cb.centroid(c));
    if (d < best_d) {
      best_d = d;
      best = static_cast<std::uint32_t>(c);
    }
  }
  return best;
}

class PointSet {
 public:
  PointSet(std::span<const FrameMatrix> frames) {
    for (const auto& m : frames) {
      if (m.n_frames == 0) continue;
      if (dim_ == 0) dim_ = m.dim;
      if (m.dim != dim_) throw ValidationError("dimensionality mismatch");
      for (float v : m.values) {
        if (!std::isfinite(v)) throw ValidationError("non-finite input frame");
        data_.push_back(v);
      }
    }
  }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct Assignment {
  std::vector<std::uint32_t> label;
  std::vector<double> distance;
  double inertia = 0.0;
};

void assign(const PointSet& points, const Codebook& cb, Assignment& a) {
  a.inertia = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    std::uint32_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cb.k; ++c) {
      const double d = squared_distance(p, cb.centroid(c));
      if (d < best_d) {
        best_d = d;
        best = static_cast<std::uint32_t>(c);
      }
    }
    a.label[i] = best;
    a.distance[i] = best_d;
    a.inertia += best_d;
  }
}

void seed_plus_plus(const PointSet& points, Codebook& cb, std::mt19937_64& rng) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  auto set_centroid = [&](std::size_t c, std::size_t i) {
    std::copy_n(points[i].begin(), dim, cb.centroids.begin() + c * dim);
  };
  const auto first = std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * n));
  set_centroid(0, first);
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], cb.centroid(0));

  for (std::size_t c = 1; c < cb.k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    if (!(total > 0.0)) throw ValidationError("fewer distinct points than K");
    const double target = uniform01(rng) * total;
    double cum = 0.0;
    std::size_t pick = n;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d2[i] > 0.0) last_positive = i;
      cum += d2[i];
      if (cum > target && d2[i] > 0.0) {
        pick = i;
        break;
      }
    }
    if (pick == n) pick = last_positive;
    set_centroid(c, pick);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points[i], cb.centroid(c)));
    }
  }
}

}  // namespace

KMeansResult train_codebook(std::span<const FrameMatrix> frames,
                            const KMeansOptions& options) {
  if (options.k == 0) throw ValidationError("K must be positive");
  const PointSet points(frames);
  const std::size_t n = points.size();
  if (n < options.k) throw ValidationError("fewer points than K");
  const std::size_t dim = points.dim();

  KMeansResult result;
  Codebook& cb = result.codebook;
  cb.k = options.k;
  cb.dim = dim;
  cb.seed = options.seed;
  cb.centroids.assign(cb.k * dim, 0.0);

  std::mt19937_64 rng(options.seed);
  seed_plus_plus(points, cb, rng);

  Assignment a{std::vector<std::uint32_t>(n), std::vector<double>(n), 0.0};
  assign(points, cb, a);
  result.inertia_history.push_back(a.inertia);

  std::vector<double> sums(cb.k * dim);
  std::vector<std::size_t> counts(cb.k);
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = points[i];
      double* s = sums.data() + a.label[i] * dim;
      for (std::size_t d = 0; d < dim; ++d) s[d] += p[d];
      ++counts[a.label[i]];
    }
    for (std::size_t c = 0; c < cb.k; ++c) {
      if (counts[c] == 0) {
        const auto far = static_cast<std::size_t>(
            std::max_element(a.distance.begin(), a.distance.end()) - a.distance.begin());
        std::copy_n(points[far].begin(), dim, cb.centroids.begin() + c * dim);
        a.distance[far] = -1.0;  // not eligible again this round
        continue;
      }
      for (std::size_t d = 0; d < dim; ++d) {
        cb.centroids[c * dim + d] = sums[c * dim + d] / static_cast<double>(counts[c]);
      }
    }
    const double previous = a.inertia;
    assign(points, cb, a);
    result.inertia_history.push_back(a.inertia);
    ++result.iterations;
    if (previous - a.inertia <= options.tol * previous) break;
  }

  for (std::size_t i = 0; i < cb.k; ++i) {
    for (std::size_t j = i + 1; j < cb.k; ++j) {
      if (std::equal(cb.centroid(i).begin(), cb.centroid(i).end(), cb.centroid(j).begin())) {
        throw ValidationError("fewer distinct points than K");
      }
    }
  }
  return result;
}

std::uint32_t nearest_centroid(const Codebook& cb, std::span<const double> point) {
  return nearest_impl(cb, point);
}

std::uint32_t nearest_centroid(const Codebook& cb, std::span<const float> point) {
  return nearest_impl(cb, point);
}

std::vector<std::uint32_t> collapse_repeats(std::span<const std::uint32_t> units) {
  std::vector<std::uint32_t> out;
  for (auto u : units) {
    if (out.empty() || out.back() != u) out.push_back(u);
  }
  return out;
}

UnitSequence encode_units(const FrameMatrix& m, const Codebook& cb, bool dedup) {
  if (m.dim != cb.dim) {
    throw ValidationError("dimensionality mismatch: frames have dim " +
                          std::to_string(m.dim) + ", codebook has dim " +
                          std::to_string(cb.dim));
  }
  UnitSequence seq;
  seq.units.reserve(m.n_frames);
  for (std::size_t i = 0; i < m.n_frames; ++i) {
    seq.units.push_back(nearest_centroid(cb, m.row(i)));
  }
  if (dedup) seq.units = collapse_repeats(seq.units);
  seq.deduplicated = dedup;
  return seq;
}

double inertia(std::span<const FrameMatrix> frames, const Codebook& cb) {
  double acc = 0.0;
  for (const auto& m : frames) {
    if (m.n_frames > 0 && m.dim != cb.dim) throw ValidationError("dimensionality mismatch");
    for (std::size_t i = 0; i < m.n_frames; ++i) {
      acc += squared_distance(m.row(i), cb.centroid(nearest_centroid(cb, m.row(i))));
    }
  }
  return acc;
}

std::vector<std::uint8_t> encode_codebook(const Codebook& cb) {
  if (cb.k == 0 || cb.dim == 0 || cb.centroids.size() != cb.k * cb.dim) {
    throw ValidationError("codebook: inconsistent shape");
  }
  internal::ByteWriter w;
  w.put_bytes("UCBK");
  w.put_uint<std::uint32_t>(kCodebookVersion);
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(cb.k));
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(cb.dim));
  w.put_uint<std::uint64_t>(cb.seed);
  w.put_uint<std::uint64_t>(cb.config_hash);
  w.put_uint<std::uint32_t>(static_cast<std::uint32_t>(cb.source_tag.size()));
  w.put_bytes(cb.source_tag);
  for (double v : cb.centroids) w.put_f64(v);
  return w.take();
}

Codebook decode_codebook(std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes, "codebook");
  const auto magic = r.get_bytes(4);
  if (std::string(magic.begin(), magic.end()) != "UCBK") {
    throw ValidationError("codebook: bad magic");
  }
  if (r.get_uint<std::uint32_t>() != kCodebookVersion) {
    throw ValidationError("codebook: version mismatch");
  }
  Codebook cb;
  cb.k = r.get_uint<std::uint32_t>();
  cb.dim = r.get_uint<std::uint32_t>();
  cb.seed = r.get_uint<std::uint64_t>();
  cb.config_hash = r.get_uint<std::uint64_t>();
  const auto tag = r.get_bytes(r.get_uint<std::uint32_t>());
  cb.source_tag.assign(tag.begin(), tag.end());
  if (cb.k == 0 || cb.dim == 0) throw ValidationError("codebook: empty shape");
  if (r.remaining() != cb.k * cb.dim * 8) {
    throw ValidationError("codebook: payload size does not match shape");
  }
  cb.centroids.resize(cb.k * cb.dim);
  for (double& v : cb.centroids) {
    v = r.get_f64();
    if (!std::isfinite(v)) throw ValidationError("codebook: non-finite centroid");
  }
  return cb;
}

void write_codebook(const Codebook& cb, const std::filesystem::path& path) {
  internal::write_file_bytes(path, encode_codebook(cb));
}

Codebook read_codebook(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError("missing file: " + path.string());
  return decode_codebook(internal::read_file_bytes(path));
}

}  // namespace sevscore
