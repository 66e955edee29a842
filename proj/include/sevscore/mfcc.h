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

#ifndef SEVSCORE_MFCC_H_
#define SEVSCORE_MFCC_H_

#include "sevscore/audio.h"
#include "sevscore/frame_matrix.h"

namespace sevscore {

struct MfccOptions {
  int n_coeffs = 13;  // [8, 40]
  double frame_length = 0.025;
  double hop = 0.010;
  int n_mel_filters = 26;
  double low_hz = 0.0;
  double high_hz = 8000.0;
};

// Hann-windowed power spectrum -> triangular mel filterbank -> natural log ->
// orthonormal DCT-II. Throws ValidationError if n_coeffs is out of range or the
// clip is shorter than one frame.
FrameMatrix compute_mfcc(const AudioClip& clip, const MfccOptions& options = {});

}  // namespace sevscore

#endif  // SEVSCORE_MFCC_H_
