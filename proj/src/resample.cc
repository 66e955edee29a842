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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <numbers>

#include "sevscore/audio.h"
#include "sevscore/error.h"

namespace sevscore {
namespace {

constexpr int kZeroCrossings = 32;
constexpr double kRolloff = 0.945;
constexpr double kKaiserBeta = 8.6;
// Above this many phases, coefficients are computed per output sample.
constexpr std::int64_t kMaxTabulatedPhases = 4096;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

class SincKernel {
 public:
  SincKernel(std::int64_t up, std::int64_t down)
      : up_(up),
        cutoff_(std::min(1.0, static_cast<double>(up) / down) * kRolloff),
        half_width_(kZeroCrossings / cutoff_),
        radius_(static_cast<std::int64_t>(std::ceil(half_width_))),
        i0_beta_(std::cyl_bessel_i(0.0, kKaiserBeta)) {}

  std::int64_t radius() const { return radius_; }
  std::int64_t taps() const { return 2 * radius_; }

  // Fills taps() weights for input indices base-radius+1 .. base+radius, where
  // the output instant lies phase/up samples after base.
  void fill(std::int64_t phase, double* out) const {
    const double frac = static_cast<double>(phase) / up_;
    double sum = 0.0;
    for (std::int64_t m = 0; m < taps(); ++m) {
      const double d = frac + static_cast<double>(radius_ - 1 - m);
      const double x = d / half_width_;
      double w = 0.0;
      if (std::abs(x) < 1.0) {
        w = cutoff_ * sinc(cutoff_ * d) *
            std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(1.0 - x * x)) / i0_beta_;
      }
      out[m] = w;
      sum += w;
    }
    if (sum != 0.0) {
      for (std::int64_t m = 0; m < taps(); ++m) out[m] /= sum;
    }
  }

 private:
  std::int64_t up_;
  double cutoff_;
  double half_width_;
  std::int64_t radius_;
  double i0_beta_;
};

}  // namespace

std::vector<double> resample(std::span<const double> input, int in_rate,
                             int out_rate) {
  if (in_rate <= 0 || out_rate <= 0) {
    throw ValidationError("resample: rates must be positive");
  }
  if (in_rate == out_rate) return {input.begin(), input.end()};
  const std::int64_t g = std::gcd(in_rate, out_rate);
  const std::int64_t up = out_rate / g;
  const std::int64_t down = in_rate / g;
  const auto n_in = static_cast<std::int64_t>(input.size());
  const std::int64_t n_out = n_in * up / down;

  const SincKernel kernel(up, down);
  const std::int64_t taps = kernel.taps();
  const bool tabulate = up <= kMaxTabulatedPhases;
  std::vector<double> table;
  if (tabulate) {
    table.resize(static_cast<std::size_t>(up * taps));
    for (std::int64_t p = 0; p < up; ++p) kernel.fill(p, table.data() + p * taps);
  }
  std::vector<double> scratch(tabulate ? 0 : static_cast<std::size_t>(taps));

  std::vector<double> out(static_cast<std::size_t>(n_out));
  for (std::int64_t j = 0; j < n_out; ++j) {
    const std::int64_t num = j * down;
    const std::int64_t base = num / up;
    const std::int64_t phase = num % up;
    const double* h;
    if (tabulate) {
      h = table.data() + phase * taps;
    } else {
      kernel.fill(phase, scratch.data());
      h = scratch.data();
    }
    const std::int64_t first = base - kernel.radius() + 1;
    const std::int64_t lo = std::max<std::int64_t>(0, -first);
    const std::int64_t hi = std::min<std::int64_t>(taps, n_in - first);
    double acc = 0.0;
    for (std::int64_t m = lo; m < hi; ++m) acc += h[m] * input[first + m];
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace sevscore
