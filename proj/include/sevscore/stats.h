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

#ifndef SEVSCORE_STATS_H_
#define SEVSCORE_STATS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace sevscore {

struct PearsonResult {
  double r = 0.0;
  double p = 1.0;  // two-sided
  std::size_t n = 0;
};

// Product-moment correlation with a two-sided p-value from Student's t with
// n-2 degrees of freedom. |r| = 1 gives p = 0. Throws ValidationError for
// unequal lengths, n < 3, or a constant input.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

// ICC(2,k): two-way random effects, average measures. ratings[i][j] is the
// score of subject i by rater j. Throws ValidationError for fewer than 2
// subjects or raters, ragged or non-finite input, and
// ValidationError("undefined reliability") when it is not defined.
double icc_2k(const std::vector<std::vector<double>>& ratings);

}  // namespace sevscore

#endif  // SEVSCORE_STATS_H_
