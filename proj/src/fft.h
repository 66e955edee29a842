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

#ifndef SEVSCORE_SRC_FFT_H_
#define SEVSCORE_SRC_FFT_H_

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace sevscore::internal {

// Real-input FFT of fixed size backed by FFTW. Plan creation is serialized
// internally; an instance must not be shared between threads.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return n_; }

  // Zero-pads (or truncates) input to size() and returns the n/2+1 bins.
  std::span<const std::complex<double>> forward(std::span<const double> input);

  // Inverse of forward, normalized by 1/n.
  std::span<const double> inverse(std::span<const std::complex<double>> spectrum);

 private:
  struct Plans;
  std::size_t n_;
  std::unique_ptr<Plans> plans_;
  std::vector<double> real_;
  std::vector<std::complex<double>> complex_;
};

}  // namespace sevscore::internal

#endif  // SEVSCORE_SRC_FFT_H_
