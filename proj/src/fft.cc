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

#include "fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace sevscore::internal {
namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct RealFft::Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
  double* real = nullptr;
  fftw_complex* complex = nullptr;
};

RealFft::RealFft(std::size_t n)
    : n_(n), plans_(std::make_unique<Plans>()), real_(n), complex_(n / 2 + 1) {
  std::lock_guard lock(planner_mutex());
  plans_->real = fftw_alloc_real(n);
  plans_->complex = fftw_alloc_complex(n / 2 + 1);
  plans_->forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), plans_->real,
                                         plans_->complex, FFTW_ESTIMATE);
  plans_->inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), plans_->complex,
                                         plans_->real, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plans_->forward);
  fftw_destroy_plan(plans_->inverse);
  fftw_free(plans_->real);
  fftw_free(plans_->complex);
}

std::span<const std::complex<double>> RealFft::forward(std::span<const double> input) {
  const std::size_t m = std::min(n_, input.size());
  std::copy_n(input.begin(), m, plans_->real);
  std::fill(plans_->real + m, plans_->real + n_, 0.0);
  fftw_execute(plans_->forward);
  for (std::size_t k = 0; k < complex_.size(); ++k) {
    complex_[k] = {plans_->complex[k][0], plans_->complex[k][1]};
  }
  return complex_;
}

std::span<const double> RealFft::inverse(std::span<const std::complex<double>> spectrum) {
  const std::size_t bins = n_ / 2 + 1;
  for (std::size_t k = 0; k < bins; ++k) {
    const auto v = k < spectrum.size() ? spectrum[k] : std::complex<double>{};
    plans_->complex[k][0] = v.real();
    plans_->complex[k][1] = v.imag();
  }
  fftw_execute(plans_->inverse);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) real_[i] = plans_->real[i] * scale;
  return real_;
}

}  // namespace sevscore::internal
