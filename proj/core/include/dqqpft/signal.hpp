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

#ifndef DQQPFT_SIGNAL_HPP_
#define DQQPFT_SIGNAL_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dqqpft/quaternion.hpp"

namespace dqqpft {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Row-major n1 x n2 grid. Element (r, c) is sample (xi1 = r, xi2 = c) in the
// time domain or (omega1 = r, omega2 = c) in a transform domain.
template <typename T>
class Signal2D {
 public:
  Signal2D() = default;
  Signal2D(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2), data_(n1 * n2) {}
  Signal2D(std::size_t n1, std::size_t n2, std::vector<T> data)
      : n1_(n1), n2_(n2), data_(std::move(data)) {
    if (data_.size() != n1_ * n2_) {
      throw DimensionError("signal data length " + std::to_string(data_.size()) +
                           " != " + std::to_string(n1_) + "x" +
                           std::to_string(n2_));
    }
  }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t size() const { return data_.size(); }

  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * n2_ + c];
  }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n2_ + c]; }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * n2_, n2_);
  }
  std::span<T> row(std::size_t r) {
    return std::span<T>(data_).subspan(r * n2_, n2_);
  }

  bool same_shape(const Signal2D& other) const {
    return n1_ == other.n1_ && n2_ == other.n2_;
  }

  friend bool operator==(const Signal2D&, const Signal2D&) = default;

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  std::vector<T> data_;
};

using QSignal2D = Signal2D<Quaternion>;
using CSignal2D = Signal2D<ComplexI>;

template <typename T>
void require_same_shape(const Signal2D<T>& a, const Signal2D<T>& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("signal shapes differ: " + std::to_string(a.n1()) +
                         "x" + std::to_string(a.n2()) + " vs " +
                         std::to_string(b.n1()) + "x" + std::to_string(b.n2()));
  }
}

// Unit sample at (0, 0).
QSignal2D delta(std::size_t n1, std::size_t n2);

// Real-valued signal from row-major values.
QSignal2D from_real(std::size_t n1, std::size_t n2,
                    std::span<const double> values);

// Real signal holding one quaternion component (0 = w .. 3 = z) of f.
// Throws std::out_of_range for other n.
QSignal2D component(const QSignal2D& f, int n);

QSignal2D operator+(const QSignal2D& f, const QSignal2D& g);
QSignal2D operator-(const QSignal2D& f, const QSignal2D& g);
QSignal2D operator*(double s, const QSignal2D& f);

// Pointwise conjugate.
QSignal2D conjugate(const QSignal2D& f);

// Pointwise q * f (left) or f * q (right) by a constant quaternion.
QSignal2D left_mul(const Quaternion& q, const QSignal2D& f);
QSignal2D right_mul(const QSignal2D& f, const Quaternion& q);

// h(xi) = f((xi - k) mod n).
QSignal2D circular_shift(const QSignal2D& f, std::size_t k1, std::size_t k2);

// h(xi) = f(xi - k) for xi >= k, zero elsewhere (samples pushed past the end
// are dropped).
QSignal2D linear_shift(const QSignal2D& f, std::size_t k1, std::size_t k2);

// max over samples of |a - b|.
double max_abs_deviation(const QSignal2D& a, const QSignal2D& b);

// max_abs_deviation(a, b) / max(max |b|, tiny). Relative to the reference b.
double max_rel_deviation(const QSignal2D& a, const QSignal2D& b);

double max_abs(const QSignal2D& f);

}  // namespace dqqpft

#endif  // DQQPFT_SIGNAL_HPP_
