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


// Reference implementations for tests. Deliberately share no code with the
// library beyond the data types: quaternions are multiplied as 2x2 complex
// matrices and every transform is a literal nested-loop sum.

#ifndef DQQPFT_TESTS_ORACLE_HPP_
#define DQQPFT_TESTS_ORACLE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "dqqpft/params.hpp"
#include "dqqpft/quaternion.hpp"
#include "dqqpft/signal.hpp"

namespace oracle {

using C = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

// q = w + xi + yj + zk  <->  [[w + x I, y + z I], [-y + z I, w - x I]].
struct M2 {
  C a, b, c, d;
};

inline M2 to_matrix(const dqqpft::Quaternion& q) {
  return {C(q.w(), q.x()), C(q.y(), q.z()), C(-q.y(), q.z()), C(q.w(), -q.x())};
}

inline dqqpft::Quaternion from_matrix(const M2& m) {
  return {m.a.real(), m.a.imag(), m.b.real(), m.b.imag()};
}

inline M2 operator*(const M2& p, const M2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
          p.c * q.b + p.d * q.d};
}

inline M2 operator+(const M2& p, const M2& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

inline M2 scale(double s, const M2& p) { return {s * p.a, s * p.b, s * p.c, s * p.d}; }

inline dqqpft::Quaternion qmul(const dqqpft::Quaternion& p, const dqqpft::Quaternion& q) {
  return from_matrix(to_matrix(p) * to_matrix(q));
}

// exp(u * theta) for u = i (axis 1) or u = j (axis 2).
inline M2 exp_i(double theta) {
  return to_matrix({std::cos(theta), std::sin(theta), 0.0, 0.0});
}
inline M2 exp_j(double theta) {
  return to_matrix({std::cos(theta), 0.0, std::sin(theta), 0.0});
}

inline double phase(const dqqpft::ParamSet& p, std::size_t n, double dt,
                    double x, double w) {
  const double du = 2.0 * kPi * p.b / (static_cast<double>(n) * dt);
  return p.a * x * x * dt * dt + 2.0 * kPi * x * w / static_cast<double>(n) +
         p.c * w * w * du * du + p.d * x * dt + p.e * w * du;
}

enum class Side { two, left, right };

// Literal four-loop definition. sign = -1 forward, +1 inverse (with the same
// 1/sqrt(n1 n2)).
inline dqqpft::QSignal2D transform(const dqqpft::QSignal2D& f,
                                   const dqqpft::ParamSet& p1,
                                   const dqqpft::ParamSet& p2, double dt1,
                                   double dt2, double sign = -1.0,
                                   Side side = Side::two) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  const double norm = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
  dqqpft::QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      M2 acc{};
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          // Inverse kernels index the time variable by the output sample.
          const double t1 = sign < 0 ? phase(p1, n1, dt1, double(x1), double(w1))
                                     : phase(p1, n1, dt1, double(w1), double(x1));
          const double t2 = sign < 0 ? phase(p2, n2, dt2, double(x2), double(w2))
                                     : phase(p2, n2, dt2, double(w2), double(x2));
          const M2 k1 = exp_i(sign * t1);
          const M2 k2 = exp_j(sign * t2);
          const M2 q = to_matrix(f(x1, x2));
          M2 term;
          switch (side) {
            case Side::two: term = k1 * q * k2; break;
            case Side::left: term = k1 * k2 * q; break;
            case Side::right: term = q * k1 * k2; break;
          }
          acc = acc + term;
        }
      }
      out(w1, w2) = from_matrix(scale(norm, acc));
    }
  }
  return out;
}

// Unnormalized two-sided quaternion DFT.
inline dqqpft::QSignal2D dqft2(const dqqpft::QSignal2D& f) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  dqqpft::QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      M2 acc{};
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          acc = acc + exp_i(-2.0 * kPi * double(x1 * w1) / double(n1)) *
                          to_matrix(f(x1, x2)) *
                          exp_j(-2.0 * kPi * double(x2 * w2) / double(n2));
        }
      }
      out(w1, w2) = from_matrix(acc);
    }
  }
  return out;
}

// One-dimensional naive DFT, sign -1 forward.
inline std::vector<C> dft(const std::vector<C>& x, double sign = -1.0) {
  const std::size_t n = x.size();
  std::vector<C> out(n);
  for (std::size_t w = 0; w < n; ++w) {
    C acc;
    for (std::size_t t = 0; t < n; ++t) {
      acc += x[t] * std::polar(1.0, sign * 2.0 * kPi * double(t * w) / double(n));
    }
    out[w] = acc;
  }
  return out;
}

// Naive separable 2D DFT.
inline dqqpft::CSignal2D dft2(const dqqpft::CSignal2D& x, double sign = -1.0) {
  const std::size_t n1 = x.n1();
  const std::size_t n2 = x.n2();
  dqqpft::CSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      C acc;
      for (std::size_t t1 = 0; t1 < n1; ++t1) {
        for (std::size_t t2 = 0; t2 < n2; ++t2) {
          const double ph = double(t1 * w1) / double(n1) + double(t2 * w2) / double(n2);
          acc += x(t1, t2) * std::polar(1.0, sign * 2.0 * kPi * ph);
        }
      }
      out(w1, w2) = acc;
    }
  }
  return out;
}

// Discrete linear canonical transform, kernels
//   exp(-u [-(a/2b) t^2 + 2 pi x w / n - (d/2b) u^2]), du = 2 pi / (b n dt).
inline dqqpft::QSignal2D dqlct(const dqqpft::QSignal2D& f, double a1, double b1,
                               double d1, double a2, double b2, double d2,
                               double dt1, double dt2) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  auto ph = [](double a, double b, double d, std::size_t n, double dt, double x,
               double w) {
    const double du = 2.0 * kPi / (b * double(n) * dt);
    const double t = x * dt;
    const double u = w * du;
    return -a / (2 * b) * t * t + 2 * kPi * x * w / double(n) - d / (2 * b) * u * u;
  };
  dqqpft::QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      M2 acc{};
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          acc = acc + exp_i(-ph(a1, b1, d1, n1, dt1, double(x1), double(w1))) *
                          to_matrix(f(x1, x2)) *
                          exp_j(-ph(a2, b2, d2, n2, dt2, double(x2), double(w2)));
        }
      }
      out(w1, w2) = from_matrix(scale(1.0 / std::sqrt(double(n1 * n2)), acc));
    }
  }
  return out;
}

// Discrete fractional Fourier transform with angles t1, t2, kernels
//   exp(-u [-(cot/2) t^2 + 2 pi x w / n - (cot/2) u^2]), du = 2 pi csc / (n dt).
inline dqqpft::QSignal2D dqfrft(const dqqpft::QSignal2D& f, double t1, double t2,
                                double dt1, double dt2) {
  // A fractional transform is the canonical one with (a, b, d) =
  // (cos, sin, cos); written out separately to keep the formula visible.
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  auto ph = [](double theta, std::size_t n, double dt, double x, double w) {
    const double cot = std::cos(theta) / std::sin(theta);
    const double du = 2.0 * kPi / (std::sin(theta) * double(n) * dt);
    const double t = x * dt;
    const double u = w * du;
    return -0.5 * cot * t * t + 2 * kPi * x * w / double(n) - 0.5 * cot * u * u;
  };
  dqqpft::QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      M2 acc{};
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          acc = acc + exp_i(-ph(t1, n1, dt1, double(x1), double(w1))) *
                          to_matrix(f(x1, x2)) *
                          exp_j(-ph(t2, n2, dt2, double(x2), double(w2)));
        }
      }
      out(w1, w2) = from_matrix(scale(1.0 / std::sqrt(double(n1 * n2)), acc));
    }
  }
  return out;
}

// Chirp-weighted circular convolution, written from the definition.
inline dqqpft::QSignal2D qp_convolve(const dqqpft::QSignal2D& f,
                                     const dqqpft::QSignal2D& g, double a1,
                                     double a2, double dt1, double dt2) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  dqqpft::QSignal2D out(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      M2 acc{};
      for (std::size_t z1 = 0; z1 < n1; ++z1) {
        for (std::size_t z2 = 0; z2 < n2; ++z2) {
          const double q1 = double(z1);
          const double q2 = double(z2);
          acc = acc + exp_i(-2 * a1 * q1 * (q1 - double(x1)) * dt1 * dt1) *
                          to_matrix(f(z1, z2)) *
                          to_matrix(g((x1 + n1 - z1) % n1, (x2 + n2 - z2) % n2)) *
                          exp_j(-2 * a2 * q2 * (q2 - double(x2)) * dt2 * dt2);
        }
      }
      out(x1, x2) = from_matrix(acc);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // DQQPFT_TESTS_ORACLE_HPP_
