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

// Complex FFTs: iterative radix-2 for power-of-two lengths, Bluestein
// chirp-z (on a power-of-two convolution) for every other length.
//
// Forward is unnormalized, X(w) = sum x(t) exp(-2 pi i t w / n); inverse
// carries 1/n per axis.

#ifndef DQQPFT_FFT_HPP_
#define DQQPFT_FFT_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dqqpft/quaternion.hpp"
#include "dqqpft/signal.hpp"

namespace dqqpft {

enum class Direction { forward, inverse };

bool is_power_of_two(std::size_t n);

// Precomputed tables for one transform length. Immutable after
// construction; transform() allocates its own scratch, so a plan can be
// shared between threads.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }
  bool uses_bluestein() const;

  // In place; data.size() must equal size().
  void transform(std::span<ComplexI> data, Direction dir) const;

 private:
  struct Radix2;
  struct Bluestein;

  std::size_t n_;
  std::unique_ptr<Radix2> radix2_;
  std::unique_ptr<Bluestein> bluestein_;
};

// Row transforms of length n2 followed by column transforms of length n1.
class Fft2Plan {
 public:
  Fft2Plan(std::size_t n1, std::size_t n2);

  std::size_t n1() const { return axis1_.size(); }
  std::size_t n2() const { return axis2_.size(); }

  // In place; x must be n1 x n2.
  void transform(CSignal2D& x, Direction dir) const;

 private:
  FftPlan axis1_;
  FftPlan axis2_;
};

// X(w1, w2) = sum x(t1, t2) exp(-+ 2 pi i (t1 w1 / n1 + t2 w2 / n2)).
CSignal2D fft2_complex(const CSignal2D& x, Direction dir);

}  // namespace dqqpft

#endif  // DQQPFT_FFT_HPP_
