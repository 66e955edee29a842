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

#ifndef SEVSCORE_SRC_WADA_TABLE_H_
#define SEVSCORE_SRC_WADA_TABLE_H_

#include <array>

namespace sevscore::internal {

inline constexpr int kWadaMinDb = -20;
inline constexpr int kWadaMaxDb = 100;
inline constexpr int kWadaTableSize = kWadaMaxDb - kWadaMinDb + 1;

// G(SNR) = ln E|z| - E ln|z| for gamma(0.4) speech plus Gaussian noise,
// one entry per dB from kWadaMinDb to kWadaMaxDb. Strictly increasing.
extern const std::array<double, kWadaTableSize> kWadaTable;

}  // namespace sevscore::internal

#endif  // SEVSCORE_SRC_WADA_TABLE_H_
