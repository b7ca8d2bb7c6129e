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

#include "dqqpft/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dqqpft {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct FftPlan::Radix2 {
  explicit Radix2(std::size_t n) : n(n), bitrev(n), twiddle(n / 2) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) {
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      }
      bitrev[i] = r;
    }
    for (std::size_t k = 0; k < n / 2; ++k) {
      twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi *
                                       static_cast<double>(k) /
                                       static_cast<double>(n));
    }
  }

  // Unnormalized in both directions.
  void run(std::span<ComplexI> x, bool inverse) const {
    for (std::size_t i = 0; i < n; ++i) {
      if (i < bitrev[i]) std::swap(x[i], x[bitrev[i]]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          const ComplexI w =
              inverse ? std::conj(twiddle[k * stride]) : twiddle[k * stride];
          const ComplexI u = x[start + k];
          const ComplexI v = x[start + k + half] * w;
          x[start + k] = u + v;
          x[start + k + half] = u - v;
        }
      }
    }
  }

  std::size_t n;
  std::vector<std::size_t> bitrev;
  std::vector<ComplexI> twiddle;
};

struct FftPlan::Bluestein {
  explicit Bluestein(std::size_t n) : n(n), m(1), chirp(n) {
    while (m < 2 * n - 1) m <<= 1;
    inner = std::make_unique<Radix2>(m);
    // k^2 mod 2n keeps the chirp argument small.
    const std::size_t period = 2 * n;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t k2 = (k * k) % period;
      chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(k2) /
                                     static_cast<double>(n));
    }
    filter.assign(m, ComplexI{});
    filter[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      filter[k] = std::conj(chirp[k]);
      filter[m - k] = std::conj(chirp[k]);
    }
    inner->run(filter, false);
  }

  // Unnormalized forward transform of length n.
  void forward(std::span<ComplexI> x) const {
    std::vector<ComplexI> work(m);
    for (std::size_t k = 0; k < n; ++k) work[k] = x[k] * chirp[k];
    inner->run(work, false);
    for (std::size_t k = 0; k < m; ++k) work[k] *= filter[k];
    inner->run(work, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) x[k] = work[k] * scale * chirp[k];
  }

  std::size_t n;
  std::size_t m;
  std::vector<ComplexI> chirp;
  std::vector<ComplexI> filter;
  std::unique_ptr<Radix2> inner;
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FFT length must be at least 1");
  if (is_power_of_two(n)) {
    radix2_ = std::make_unique<Radix2>(n);
  } else {
    bluestein_ = std::make_unique<Bluestein>(n);
  }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

bool FftPlan::uses_bluestein() const { return bluestein_ != nullptr; }

void FftPlan::transform(std::span<ComplexI> data, Direction dir) const {
  if (data.size() != n_) {
    throw DimensionError("FFT input length does not match the plan");
  }
  const bool inverse = dir == Direction::inverse;
  if (radix2_) {
    radix2_->run(data, inverse);
  } else if (!inverse) {
    bluestein_->forward(data);
  } else {
    // ifft(x) = conj(fft(conj(x))), scaled below.
    for (auto& v : data) v = std::conj(v);
    bluestein_->forward(data);
    for (auto& v : data) v = std::conj(v);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& v : data) v *= scale;
  }
}

Fft2Plan::Fft2Plan(std::size_t n1, std::size_t n2) : axis1_(n1), axis2_(n2) {}

void Fft2Plan::transform(CSignal2D& x, Direction dir) const {
  const std::size_t n1 = axis1_.size();
  const std::size_t n2 = axis2_.size();
  if (x.n1() != n1 || x.n2() != n2) {
    throw DimensionError("2D FFT input shape does not match the plan");
  }
  for (std::size_t r = 0; r < n1; ++r) axis2_.transform(x.row(r), dir);
  if (n1 == 1) return;
  std::vector<ComplexI> column(n1);
  for (std::size_t c = 0; c < n2; ++c) {
    for (std::size_t r = 0; r < n1; ++r) column[r] = x(r, c);
    axis1_.transform(column, dir);
    for (std::size_t r = 0; r < n1; ++r) x(r, c) = column[r];
  }
}

CSignal2D fft2_complex(const CSignal2D& x, Direction dir) {
  CSignal2D out = x;
  Fft2Plan(x.n1(), x.n2()).transform(out, dir);
  return out;
}

}  // namespace dqqpft
