// Copyright 2026 The dqqpft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <vector>

#include "dqqpft/fft.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

namespace {

using dqqpft::ComplexI;
using dqqpft::CSignal2D;
using dqqpft::Direction;
using dqqpft::FftPlan;

double max_dev(const CSignal2D& a, const CSignal2D& b) {
  double m = 0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a.data()[n] - b.data()[n]));
  return m;
}

double max_norm(const CSignal2D& a) {
  double m = 0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

TEST(Fft, PowerOfTwoPredicate) {
  EXPECT_FALSE(dqqpft::is_power_of_two(0));
  EXPECT_TRUE(dqqpft::is_power_of_two(1));
  EXPECT_TRUE(dqqpft::is_power_of_two(64));
  EXPECT_FALSE(dqqpft::is_power_of_two(6));
}

TEST(Fft, DeltaAndConstant) {
  FftPlan plan(4);
  std::vector<ComplexI> x{1, 0, 0, 0};
  plan.transform(x, Direction::forward);
  for (const auto& v : x) EXPECT_NEAR(std::abs(v - ComplexI(1)), 0, 1e-15);
  std::vector<ComplexI> y{1, 1, 1, 1};
  plan.transform(y, Direction::forward);
  EXPECT_NEAR(std::abs(y[0] - ComplexI(4)), 0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(y[k]), 0, 1e-15);
}

TEST(Fft, StrategySelection) {
  EXPECT_FALSE(FftPlan(1).uses_bluestein());
  EXPECT_FALSE(FftPlan(16).uses_bluestein());
  EXPECT_TRUE(FftPlan(3).uses_bluestein());
  EXPECT_TRUE(FftPlan(12).uses_bluestein());
}

TEST(Fft, OneDimensionalMatchesDftAllLengths) {
  gen::Gen g(60);
  for (std::size_t n = 1; n <= 64; ++n) {
    std::vector<ComplexI> x(n);
    for (auto& v : x) v = g.complex();
    for (double sign : {-1.0, 1.0}) {
      std::vector<ComplexI> y = x;
      FftPlan(n).transform(y, sign < 0 ? Direction::forward : Direction::inverse);
      auto want = oracle::dft(x, sign);
      if (sign > 0) for (auto& v : want) v /= double(n);
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_NEAR(std::abs(y[k] - want[k]), 0, 1e-12) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Fft2, SixByTen) {
  gen::Gen g(61);
  const CSignal2D x = g.complex_signal(6, 10);
  EXPECT_LT(max_dev(dqqpft::fft2_complex(x, Direction::forward), oracle::dft2(x)), 1e-12);
}

TEST(Fft2, AllSizesUpToSixteen) {
  gen::Gen g(62);
  for (std::size_t n1 = 1; n1 <= 16; ++n1) {
    for (std::size_t n2 = 1; n2 <= 16; ++n2) {
      const CSignal2D x = g.complex_signal(n1, n2);
      const CSignal2D X = dqqpft::fft2_complex(x, Direction::forward);
      const double scale = std::max(max_norm(X), 1.0);
      EXPECT_LT(max_dev(X, oracle::dft2(x)), 1e-12 * scale) << n1 << "x" << n2;
      EXPECT_LT(max_dev(dqqpft::fft2_complex(X, Direction::inverse), x), 1e-12) << n1 << "x" << n2;
    }
  }
}

TEST(Fft2, InverseMatchesPositiveSignDft) {
  gen::Gen g(63);
  const CSignal2D x = g.complex_signal(5, 8);
  CSignal2D want = oracle::dft2(x, 1.0);
  for (auto& v : want.data()) v /= 40.0;
  EXPECT_LT(max_dev(dqqpft::fft2_complex(x, Direction::inverse), want), 1e-13);
}

TEST(Fft2, PlanIsReusable) {
  gen::Gen g(64);
  const dqqpft::Fft2Plan plan(7, 4);
  for (int t = 0; t < 3; ++t) {
    const CSignal2D x = g.complex_signal(7, 4);
    CSignal2D y = x;
    plan.transform(y, Direction::forward);
    EXPECT_LT(max_dev(y, oracle::dft2(x)), 1e-12);
  }
}

TEST(Fft, Errors) {
  EXPECT_THROW(FftPlan(0), std::invalid_argument);
  std::vector<ComplexI> x(5);
  EXPECT_THROW(FftPlan(4).transform(x, Direction::forward), dqqpft::DimensionError);
  CSignal2D y(3, 3);
  EXPECT_THROW(dqqpft::Fft2Plan(3, 4).transform(y, Direction::forward), dqqpft::DimensionError);
}

}  // namespace
