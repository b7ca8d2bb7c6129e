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

#ifndef DQQPFT_QUATERNION_HPP_
#define DQQPFT_QUATERNION_HPP_

#include <cmath>
#include <complex>
#include <iosfwd>
#include <utility>

namespace dqqpft {

// Element of the i-complex subfield {re + im*i} of the quaternions. The same
// type carries j-complex values (re + im*j) where an interface says so.
using ComplexI = std::complex<double>;

// Hamilton quaternion w + x*i + y*j + z*k. Immutable value type: every
// operation returns a new value.
class Quaternion {
 public:
  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x, double y, double z)
      : w_(w), x_(x), y_(y), z_(z) {}
  // Real scalars embed as w.
  constexpr Quaternion(double real) : w_(real) {}  // NOLINT(runtime/explicit)

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double w() const { return w_; }
  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }

  // Component by index: 0 -> w, 1 -> x, 2 -> y, 3 -> z.
  constexpr double component(int n) const {
    switch (n) {
      case 0: return w_;
      case 1: return x_;
      case 2: return y_;
      default: return z_;
    }
  }

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;

 private:
  double w_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.w() + q.w(), p.x() + q.x(), p.y() + q.y(), p.z() + q.z()};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.w() - q.w(), p.x() - q.x(), p.y() - q.y(), p.z() - q.z()};
}

constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.w(), -q.x(), -q.y(), -q.z()};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w(), s * q.x(), s * q.y(), s * q.z()};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.w() / s, q.x() / s, q.y() / s, q.z() / s};
}

// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.w() * q.w() - p.x() * q.x() - p.y() * q.y() - p.z() * q.z(),
          p.w() * q.x() + p.x() * q.w() + p.y() * q.z() - p.z() * q.y(),
          p.w() * q.y() - p.x() * q.z() + p.y() * q.w() + p.z() * q.x(),
          p.w() * q.z() + p.x() * q.y() - p.y() * q.x() + p.z() * q.w()};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return mul(p, q);
}

constexpr Quaternion conjugate(const Quaternion& q) {
  return {q.w(), -q.x(), -q.y(), -q.z()};
}

constexpr double norm_sq(const Quaternion& q) {
  return q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z();
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double scalar_part(const Quaternion& q) { return q.w(); }

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w()) && std::isfinite(q.x()) &&
         std::isfinite(q.y()) && std::isfinite(q.z());
}

// c = re + im*i  ->  (re, im, 0, 0)
constexpr Quaternion embed_i(const ComplexI& c) {
  return {c.real(), c.imag(), 0.0, 0.0};
}

// c = re + im*j  ->  (re, 0, im, 0)
constexpr Quaternion embed_j(const ComplexI& c) {
  return {c.real(), 0.0, c.imag(), 0.0};
}

// embed_i(c) * q without the zero terms.
constexpr Quaternion left_mul_i(const ComplexI& c, const Quaternion& q) {
  const double a = c.real();
  const double b = c.imag();
  return {a * q.w() - b * q.x(), a * q.x() + b * q.w(), a * q.y() - b * q.z(),
          a * q.z() + b * q.y()};
}

// q * embed_j(c) without the zero terms.
constexpr Quaternion right_mul_j(const Quaternion& q, const ComplexI& c) {
  const double a = c.real();
  const double b = c.imag();
  return {a * q.w() - b * q.y(), a * q.x() - b * q.z(), a * q.y() + b * q.w(),
          a * q.z() + b * q.x()};
}

// q = t + j*h with t = w + x*i and h = y - z*i.
constexpr std::pair<ComplexI, ComplexI> symplectic_split(const Quaternion& q) {
  return {ComplexI(q.w(), q.x()), ComplexI(q.y(), -q.z())};
}

constexpr Quaternion symplectic_join(const ComplexI& t, const ComplexI& h) {
  return {t.real(), t.imag(), h.real(), -h.imag()};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace dqqpft

#endif  // DQQPFT_QUATERNION_HPP_
