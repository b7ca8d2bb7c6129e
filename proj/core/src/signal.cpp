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

#include "dqqpft/signal.hpp"

#include <algorithm>
#include <limits>

namespace dqqpft {
namespace {

template <typename Fn>
QSignal2D map(const QSignal2D& f, Fn fn) {
  QSignal2D out(f.n1(), f.n2());
  std::transform(f.data().begin(), f.data().end(), out.data().begin(), fn);
  return out;
}

template <typename Fn>
QSignal2D zip(const QSignal2D& f, const QSignal2D& g, Fn fn) {
  require_same_shape(f, g);
  QSignal2D out(f.n1(), f.n2());
  std::transform(f.data().begin(), f.data().end(), g.data().begin(),
                 out.data().begin(), fn);
  return out;
}

}  // namespace

QSignal2D delta(std::size_t n1, std::size_t n2) {
  QSignal2D out(n1, n2);
  if (out.size() > 0) out(0, 0) = Quaternion(1.0);
  return out;
}

QSignal2D from_real(std::size_t n1, std::size_t n2,
                    std::span<const double> values) {
  if (values.size() != n1 * n2) {
    throw DimensionError("from_real: value count does not match shape");
  }
  std::vector<Quaternion> data(values.begin(), values.end());
  return QSignal2D(n1, n2, std::move(data));
}

QSignal2D component(const QSignal2D& f, int n) {
  if (n < 0 || n > 3) throw std::out_of_range("quaternion component index");
  return map(f, [n](const Quaternion& q) { return Quaternion(q.component(n)); });
}

QSignal2D operator+(const QSignal2D& f, const QSignal2D& g) {
  return zip(f, g, [](const Quaternion& a, const Quaternion& b) { return a + b; });
}

QSignal2D operator-(const QSignal2D& f, const QSignal2D& g) {
  return zip(f, g, [](const Quaternion& a, const Quaternion& b) { return a - b; });
}

QSignal2D operator*(double s, const QSignal2D& f) {
  return map(f, [s](const Quaternion& q) { return s * q; });
}

QSignal2D conjugate(const QSignal2D& f) {
  return map(f, [](const Quaternion& q) { return conjugate(q); });
}

QSignal2D left_mul(const Quaternion& q, const QSignal2D& f) {
  return map(f, [&q](const Quaternion& v) { return q * v; });
}

QSignal2D right_mul(const QSignal2D& f, const Quaternion& q) {
  return map(f, [&q](const Quaternion& v) { return v * q; });
}

QSignal2D circular_shift(const QSignal2D& f, std::size_t k1, std::size_t k2) {
  QSignal2D out(f.n1(), f.n2());
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t c = 0; c < n2; ++c) {
      out(r, c) = f((r + n1 - k1 % n1) % n1, (c + n2 - k2 % n2) % n2);
    }
  }
  return out;
}

QSignal2D linear_shift(const QSignal2D& f, std::size_t k1, std::size_t k2) {
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t r = k1; r < f.n1(); ++r) {
    for (std::size_t c = k2; c < f.n2(); ++c) {
      out(r, c) = f(r - k1, c - k2);
    }
  }
  return out;
}

double max_abs(const QSignal2D& f) {
  double m = 0.0;
  for (const auto& q : f.data()) m = std::max(m, norm(q));
  return m;
}

double max_abs_deviation(const QSignal2D& a, const QSignal2D& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    m = std::max(m, norm(a.data()[n] - b.data()[n]));
  }
  return m;
}

double max_rel_deviation(const QSignal2D& a, const QSignal2D& b) {
  const double scale =
      std::max(max_abs(b), std::numeric_limits<double>::min());
  return max_abs_deviation(a, b) / scale;
}

}  // namespace dqqpft
