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

// Direct evaluation of the two-sided discrete quaternion quadratic-phase
// Fourier transform and its relatives.
//
// For parametric sets p1 (axis 1, imaginary unit i) and p2 (axis 2, unit j)
// the transform of an n1 x n2 quaternion signal f is
//
//   F(w1, w2) = sum_{x1, x2} Z1(x1, w1) * f(x1, x2) * Z2(x2, w2)
//
// with the axis kernels
//
//   Zs(x, w) = 1/sqrt(ns) * exp(-u * phase_s(x, w)),   u = i or j,
//   phase_s(x, w) = a x^2 dt^2 + 2 pi x w / ns + c w^2 du^2 + d x dt + e w du.
//
// The product order is load-bearing: the i-kernel multiplies from the left
// and the j-kernel from the right.

#ifndef DQQPFT_TRANSFORM_HPP_
#define DQQPFT_TRANSFORM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dqqpft/params.hpp"
#include "dqqpft/quaternion.hpp"
#include "dqqpft/signal.hpp"

namespace dqqpft {

enum class Side {
  two_sided,    // Z1 * f * Z2
  left_sided,   // Z1 * Z2 * f
  right_sided,  // f * Z1 * Z2
};

// Parametric sets, grid and side of one transform. The grid is always
// derived from the parametric sets it is stored with.
class TransformConfig {
 public:
  static TransformConfig make(std::size_t n1, std::size_t n2, double dt1,
                              double dt2, const ParamSet& p1,
                              const ParamSet& p2,
                              Side side = Side::two_sided);
  static TransformConfig make(std::size_t n1, std::size_t n2,
                              const ParamPair& params, double dt1 = 1.0,
                              double dt2 = 1.0, Side side = Side::two_sided);

  const ParamSet& p1() const { return p1_; }
  const ParamSet& p2() const { return p2_; }
  ParamPair params() const { return {p1_, p2_}; }
  const Grid& grid() const { return grid_; }
  Side side() const { return side_; }

  std::size_t n1() const { return grid_.n1(); }
  std::size_t n2() const { return grid_.n2(); }

 private:
  TransformConfig(const ParamSet& p1, const ParamSet& p2, const Grid& grid,
                  Side side)
      : p1_(p1), p2_(p2), grid_(grid), side_(side) {}

  ParamSet p1_;
  ParamSet p2_;
  Grid grid_;
  Side side_;
};

// a x^2 dt^2 + d x dt.
double time_chirp_phase(const ParamSet& p, double dt, long long xi);

// c w^2 du^2 + e w du.
double frequency_chirp_phase(const ParamSet& p, double du, long long omega);

// Full kernel phase; the 2 pi x w / n term is reduced modulo n before
// scaling, so large index products keep full precision. Signed indices are
// accepted.
double kernel_phase(const ParamSet& p, std::size_t n, double dt, double du,
                    long long xi, long long omega);

// Z1(xi1, w1) as an i-complex number. Throws std::out_of_range.
ComplexI left_kernel(const TransformConfig& cfg, std::size_t xi1,
                     std::size_t w1);

// Z2(xi2, w2); the imaginary part is the j-coefficient.
ComplexI right_kernel(const TransformConfig& cfg, std::size_t xi2,
                      std::size_t w2);

// O(n1^2 n2^2) summation with precomputed kernel tables. The per-sample
// summation order is fixed (xi1 outer, xi2 inner).
QSignal2D forward_direct(const QSignal2D& f, const TransformConfig& cfg);

// The transform at one frequency index, evaluated from the kernel formula.
// Indices outside [0, n) are allowed: the chirp terms are not n-periodic,
// so F(w - n) != F(w) in general.
Quaternion forward_at(const QSignal2D& f, const TransformConfig& cfg,
                      long long w1, long long w2);

// Unnormalized two-sided quaternion DFT:
//   sum exp(-i 2 pi x1 w1 / n1) f(x1, x2) exp(-j 2 pi x2 w2 / n2).
QSignal2D dqft2(const QSignal2D& f);

// Chirp, dqft2, chirp. Two-sided configurations only.
QSignal2D forward_via_dqft(const QSignal2D& f, const TransformConfig& cfg);

// Inverse of forward_direct for the same configuration (every side).
QSignal2D inverse_direct(const QSignal2D& spectrum, const TransformConfig& cfg);

// One-dimensional transform with the kernel multiplied on the right:
//   F(w) = 1/sqrt(n) sum f(x) exp(-i phase(x, w)).
std::vector<Quaternion> dqpft_1d(std::span<const Quaternion> f,
                                 const ParamSet& p, double dt);
std::vector<ComplexI> dqpft_1d(std::span<const ComplexI> f, const ParamSet& p,
                               double dt);

// Sum of squared sample norms.
double energy(const QSignal2D& f);

// exp(i 2 pi s1 x1 / n1) * f(x1, x2) * exp(j 2 pi s2 x2 / n2).
QSignal2D modulate(const QSignal2D& f, std::size_t s1, std::size_t s2);

// Right-hand side of the modulation identity:
//   exp(i[c1 (s1^2 - 2 w1 s1) du1^2 - e1 s1 du1]) * F(w1 - s1, w2 - s2)
//     * exp(j[c2 (s2^2 - 2 w2 s2) du2^2 - e2 s2 du2]),
// where F is evaluated at the literal shifted frequency (see forward_at).
// Equals forward_direct(modulate(f, s1, s2), cfg). Two-sided only.
QSignal2D modulation_rhs(const QSignal2D& f, const TransformConfig& cfg,
                         std::size_t s1, std::size_t s2);

// Right-hand side of the translation identity:
//   exp(-i(a1 k1^2 dt1^2 + 2 pi k1 w1 / n1 + d1 k1 dt1))
//     * F[exp(-2i a1 x1 k1 dt1^2) f exp(-2j a2 x2 k2 dt2^2)](w)
//     * exp(-j(a2 k2^2 dt2^2 + 2 pi k2 w2 / n2 + d2 k2 dt2)).
// It equals the transform of linear_shift(f, k) when f vanishes for
// x_s >= n_s - k_s, and of circular_shift(f, k) when a = d = 0 on both
// axes. Two-sided only.
QSignal2D translation_rhs(const QSignal2D& f, const TransformConfig& cfg,
                          std::size_t k1, std::size_t k2);

// Q[f0] - i Q[f1] - Q[f2] j - i Q[f3] k, assembled from the transforms of
// the four real components, in the order written.
QSignal2D conjugate_transform_decomposition(const QSignal2D& f,
                                            const TransformConfig& cfg);

}  // namespace dqqpft

#endif  // DQQPFT_TRANSFORM_HPP_
