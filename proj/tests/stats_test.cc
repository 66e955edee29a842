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

#include "sevscore/stats.h"

#include <gtest/gtest.h>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <random>

#include "sevscore/error.h"

namespace sevscore {
namespace {

struct Oracle {
  double r;
  double p;
};

Oracle pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const long double mx = sx / n, my = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / (1.0 - r * r));
  const boost::math::students_t dist(df);
  return {r, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)))};
}

double icc_oracle(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size(), k = m[0].size();
  long double grand = 0;
  for (const auto& row : m) {
    for (double v : row) grand += v;
  }
  grand /= n * k;
  long double ssr = 0, ssc = 0, sst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double rm = 0;
    for (double v : m[i]) rm += v;
    rm /= k;
    ssr += k * (rm - grand) * (rm - grand);
  }
  for (std::size_t j = 0; j < k; ++j) {
    long double cm = 0;
    for (std::size_t i = 0; i < n; ++i) cm += m[i][j];
    cm /= n;
    ssc += n * (cm - grand) * (cm - grand);
  }
  for (const auto& row : m) {
    for (double v : row) sst += (v - grand) * (v - grand);
  }
  const long double msr = ssr / (n - 1), msc = ssc / (k - 1);
  const long double mse = (sst - ssr - ssc) / ((n - 1) * (k - 1));
  return static_cast<double>((msr - mse) / (msr + (msc - mse) / n));
}

TEST(Pearson, PerfectAffine) {
  std::vector<double> x, y;
  for (int i = 1; i <= 10; ++i) {
    x.push_back(i);
    y.push_back(2.0 * i + 1.0);
  }
  const PearsonResult r = pearson(x, y);
  EXPECT_NEAR(r.r, 1.0, 1e-15);
  EXPECT_EQ(r.p, 0.0);
  EXPECT_EQ(r.n, 10u);
}

TEST(Pearson, CovarianceCancels) {
  const PearsonResult r = pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 1});
  EXPECT_NEAR(r.r, 0.0, 1e-15);
  EXPECT_NEAR(r.p, 1.0, 1e-12);
}

TEST(Pearson, FivePointOracle) {
  const std::vector<double> x = {1, 2, 3, 4, 5}, y = {2, 1, 4, 3, 5};
  const Oracle o = pearson_oracle(x, y);
  const PearsonResult r = pearson(x, y);
  EXPECT_NEAR(r.r, o.r, 1e-9);
  EXPECT_NEAR(r.p, o.p, 1e-6);
  EXPECT_NEAR(r.r, 0.8, 1e-12);
}

TEST(Pearson, Errors) {
  EXPECT_THROW(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}), ValidationError);
  EXPECT_THROW(pearson(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), ValidationError);
  EXPECT_THROW(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}), ValidationError);
}

TEST(PearsonProperty, MatchesOracleSymmetricAffine) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 60)(rng);
    const double coupling = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = g(rng);
      y[i] = coupling * x[i] + g(rng);
    }
    const Oracle o = pearson_oracle(x, y);
    const PearsonResult r = pearson(x, y);
    ASSERT_NEAR(r.r, o.r, 1e-9);
    ASSERT_NEAR(r.p, o.p, 1e-6);
    ASSERT_GE(r.p, 0.0);
    ASSERT_LE(r.p, 1.0);
    ASSERT_NEAR(pearson(y, x).r, r.r, 1e-12);
    const double a = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
    const double b = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
    if (std::abs(a) < 1e-3) continue;
    std::vector<double> ax = x;
    for (auto& v : ax) v = a * v + b;
    ASSERT_NEAR(pearson(ax, y).r, (a > 0 ? 1.0 : -1.0) * r.r, 1e-12);
  }
}

TEST(IncompleteBeta, MatchesBoost) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = std::uniform_real_distribution<double>(0.1, 40.0)(rng);
    const double b = std::uniform_real_distribution<double>(0.1, 40.0)(rng);
    const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    ASSERT_NEAR(regularized_incomplete_beta(a, b, x), boost::math::ibeta(a, b, x), 1e-9)
        << a << " " << b << " " << x;
  }
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 0.0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 1.0), 1.0);
}

TEST(Icc, IdenticalRatersIsOne) {
  const std::vector<std::vector<double>> m = {{1, 1, 1}, {3, 3, 3}, {2, 2, 2}};
  EXPECT_NEAR(icc_2k(m), 1.0, 1e-12);
}

TEST(Icc, FourByThreeOracle) {
  const std::vector<std::vector<double>> m = {{9, 2, 5}, {6, 1, 3}, {8, 4, 6}, {7, 1, 2}};
  EXPECT_NEAR(icc_2k(m), icc_oracle(m), 1e-9);
}

TEST(Icc, Errors) {
  try {
    icc_2k({{2, 2}, {2, 2}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()), "undefined reliability");
  }
  EXPECT_THROW(icc_2k({{1, 2}, {3}}), ValidationError);
  EXPECT_THROW(icc_2k({{1, 2}}), ValidationError);
  EXPECT_THROW(icc_2k({{1}, {2}}), ValidationError);
}

TEST(IccProperty, OracleAndShiftInvariance) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<double>> m(n, std::vector<double>(k));
    for (auto& row : m) {
      const double subject = 3.0 * g(rng);
      for (auto& v : row) v = subject + g(rng);
    }
    const double v = icc_2k(m);
    ASSERT_NEAR(v, icc_oracle(m), 1e-9);
    const double c = std::uniform_real_distribution<double>(-100.0, 100.0)(rng);
    auto shifted = m;
    for (auto& row : shifted) {
      for (auto& x : row) x += c;
    }
    ASSERT_NEAR(icc_2k(shifted), v, 1e-9);
  }
}

}  // namespace
}  // namespace sevscore
