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

#include "dqqpft/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dqqpft {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long as_index(std::size_t v) { return static_cast<long long>(v); }

// 2 pi (x w mod n) / n.
double dft_phase(std::size_t n, long long xi, long long omega) {
  const long long nn = as_index(n);
  long long r = (xi % nn) * (omega % nn) % nn;
  if (r < 0) r += nn;
  return kTwoPi * static_cast<double>(r) / static_cast<double>(n);
}

// n x n table of (1/sqrt(n)) exp(-u phase(x, w)) indexed [x * n + w].
std::vector<ComplexI> kernel_table(const ParamSet& p, std::size_t n, double dt,
                                   double du) {
  std::vector<ComplexI> table(n * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      table[x * n + w] =
          std::polar(scale, -kernel_phase(p, n, dt, du, as_index(x), as_index(w)));
    }
  }
  return table;
}

void require_shape(const QSignal2D& f, const TransformConfig& cfg) {
  if (f.n1() != cfg.n1() || f.n2() != cfg.n2()) {
    throw DimensionError("signal is " + std::to_string(f.n1()) + "x" +
                         std::to_string(f.n2()) + " but the transform grid is " +
                         std::to_string(cfg.n1()) + "x" +
                         std::to_string(cfg.n2()));
  }
}

void require_two_sided(const TransformConfig& cfg, const char* what) {
  if (cfg.side() != Side::two_sided) {
    throw std::invalid_argument(std::string(what) +
                                " is defined for two-sided transforms only");
  }
}

// One kernel-weighted term for the configured side. z1 is i-complex, z2 is
// j-complex.
Quaternion sided_term(Side side, const ComplexI& z1, const Quaternion& q,
                      const ComplexI& z2) {
  switch (side) {
    case Side::two_sided:
      return left_mul_i(z1, right_mul_j(q, z2));
    case Side::left_sided:
      return left_mul_i(z1, embed_j(z2) * q);
    case Side::right_sided:
      return right_mul_j(q * embed_i(z1), z2);
  }
  return {};
}

// Inverse term: undoes sided_term when summed over the frequencies.
Quaternion sided_inverse_term(Side side, const ComplexI& z1, const Quaternion& q,
                              const ComplexI& z2) {
  const ComplexI c1 = std::conj(z1);
  const ComplexI c2 = std::conj(z2);
  switch (side) {
    case Side::two_sided:
      return left_mul_i(c1, right_mul_j(q, c2));
    case Side::left_sided:
      return embed_j(c2) * left_mul_i(c1, q);
    case Side::right_sided:
      return right_mul_j(q, c2) * embed_i(c1);
  }
  return {};
}

}  // namespace

TransformConfig TransformConfig::make(std::size_t n1, std::size_t n2, double dt1,
                                      double dt2, const ParamSet& p1,
                                      const ParamSet& p2, Side side) {
  return TransformConfig(p1, p2, make_grid(n1, n2, dt1, dt2, p1, p2), side);
}

TransformConfig TransformConfig::make(std::size_t n1, std::size_t n2,
                                      const ParamPair& params, double dt1,
                                      double dt2, Side side) {
  return make(n1, n2, dt1, dt2, params.p1, params.p2, side);
}

double time_chirp_phase(const ParamSet& p, double dt, long long xi) {
  const double t = static_cast<double>(xi) * dt;
  return p.a * t * t + p.d * t;
}

double frequency_chirp_phase(const ParamSet& p, double du, long long omega) {
  const double u = static_cast<double>(omega) * du;
  return p.c * u * u + p.e * u;
}

double kernel_phase(const ParamSet& p, std::size_t n, double dt, double du,
                    long long xi, long long omega) {
  return time_chirp_phase(p, dt, xi) + dft_phase(n, xi, omega) +
         frequency_chirp_phase(p, du, omega);
}

ComplexI left_kernel(const TransformConfig& cfg, std::size_t xi1,
                     std::size_t w1) {
  const std::size_t n = cfg.n1();
  if (xi1 >= n || w1 >= n) throw std::out_of_range("left_kernel index");
  const auto& g = cfg.grid();
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                    -kernel_phase(cfg.p1(), n, g.dt1(), g.du1(), as_index(xi1),
                                  as_index(w1)));
}

ComplexI right_kernel(const TransformConfig& cfg, std::size_t xi2,
                      std::size_t w2) {
  const std::size_t n = cfg.n2();
  if (xi2 >= n || w2 >= n) throw std::out_of_range("right_kernel index");
  const auto& g = cfg.grid();
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                    -kernel_phase(cfg.p2(), n, g.dt2(), g.du2(), as_index(xi2),
                                  as_index(w2)));
}

QSignal2D forward_direct(const QSignal2D& f, const TransformConfig& cfg) {
  require_shape(f, cfg);
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  const auto& g = cfg.grid();
  const auto z1 = kernel_table(cfg.p1(), n1, g.dt1(), g.du1());
  const auto z2 = kernel_table(cfg.p2(), n2, g.dt2(), g.du2());
  const Side side = cfg.side();

  QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      Quaternion acc;
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        const ComplexI k1 = z1[x1 * n1 + w1];
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          acc = acc + sided_term(side, k1, f(x1, x2), z2[x2 * n2 + w2]);
        }
      }
      out(w1, w2) = acc;
    }
  }
  return out;
}

Quaternion forward_at(const QSignal2D& f, const TransformConfig& cfg,
                      long long w1, long long w2) {
  require_shape(f, cfg);
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  const auto& g = cfg.grid();
  const double s1 = 1.0 / std::sqrt(static_cast<double>(n1));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(n2));

  std::vector<ComplexI> k2(n2);
  for (std::size_t x2 = 0; x2 < n2; ++x2) {
    k2[x2] = std::polar(
        s2, -kernel_phase(cfg.p2(), n2, g.dt2(), g.du2(), as_index(x2), w2));
  }
  Quaternion acc;
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    const ComplexI k1 = std::polar(
        s1, -kernel_phase(cfg.p1(), n1, g.dt1(), g.du1(), as_index(x1), w1));
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      acc = acc + sided_term(cfg.side(), k1, f(x1, x2), k2[x2]);
    }
  }
  return acc;
}

QSignal2D dqft2(const QSignal2D& f) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  std::vector<ComplexI> e1(n1 * n1);
  std::vector<ComplexI> e2(n2 * n2);
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t w = 0; w < n1; ++w) {
      e1[x * n1 + w] = std::polar(1.0, -dft_phase(n1, as_index(x), as_index(w)));
    }
  }
  for (std::size_t x = 0; x < n2; ++x) {
    for (std::size_t w = 0; w < n2; ++w) {
      e2[x * n2 + w] = std::polar(1.0, -dft_phase(n2, as_index(x), as_index(w)));
    }
  }

  QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      Quaternion acc;
      for (std::size_t x1 = 0; x1 < n1; ++x1) {
        const ComplexI k1 = e1[x1 * n1 + w1];
        for (std::size_t x2 = 0; x2 < n2; ++x2) {
          acc = acc + left_mul_i(k1, right_mul_j(f(x1, x2), e2[x2 * n2 + w2]));
        }
      }
      out(w1, w2) = acc;
    }
  }
  return out;
}

QSignal2D forward_via_dqft(const QSignal2D& f, const TransformConfig& cfg) {
  require_shape(f, cfg);
  require_two_sided(cfg, "forward_via_dqft");
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  const auto& g = cfg.grid();

  QSignal2D chirped(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    const ComplexI a1 =
        std::polar(1.0, -time_chirp_phase(cfg.p1(), g.dt1(), as_index(x1)));
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      const ComplexI a2 =
          std::polar(1.0, -time_chirp_phase(cfg.p2(), g.dt2(), as_index(x2)));
      chirped(x1, x2) = left_mul_i(a1, right_mul_j(f(x1, x2), a2));
    }
  }

  QSignal2D spectrum = dqft2(chirped);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    const ComplexI e1 = std::polar(
        scale, -frequency_chirp_phase(cfg.p1(), g.du1(), as_index(w1)));
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      const ComplexI e2 = std::polar(
          1.0, -frequency_chirp_phase(cfg.p2(), g.du2(), as_index(w2)));
      spectrum(w1, w2) = left_mul_i(e1, right_mul_j(spectrum(w1, w2), e2));
    }
  }
  return spectrum;
}

QSignal2D inverse_direct(const QSignal2D& spectrum, const TransformConfig& cfg) {
  require_shape(spectrum, cfg);
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  const auto& g = cfg.grid();
  const auto z1 = kernel_table(cfg.p1(), n1, g.dt1(), g.du1());
  const auto z2 = kernel_table(cfg.p2(), n2, g.dt2(), g.du2());
  const Side side = cfg.side();

  QSignal2D out(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      Quaternion acc;
      for (std::size_t w1 = 0; w1 < n1; ++w1) {
        const ComplexI k1 = z1[x1 * n1 + w1];
        for (std::size_t w2 = 0; w2 < n2; ++w2) {
          acc = acc +
                sided_inverse_term(side, k1, spectrum(w1, w2), z2[x2 * n2 + w2]);
        }
      }
      out(x1, x2) = acc;
    }
  }
  return out;
}

std::vector<Quaternion> dqpft_1d(std::span<const Quaternion> f,
                                 const ParamSet& p, double dt) {
  validate(p);
  const std::size_t n = f.size();
  std::vector<Quaternion> out(n);
  if (n == 0) return out;
  const double du = frequency_step(p, n, dt);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t w = 0; w < n; ++w) {
    Quaternion acc;
    for (std::size_t x = 0; x < n; ++x) {
      const ComplexI k =
          std::polar(scale, -kernel_phase(p, n, dt, du, as_index(x), as_index(w)));
      acc = acc + f[x] * embed_i(k);
    }
    out[w] = acc;
  }
  return out;
}

std::vector<ComplexI> dqpft_1d(std::span<const ComplexI> f, const ParamSet& p,
                               double dt) {
  validate(p);
  const std::size_t n = f.size();
  std::vector<ComplexI> out(n);
  if (n == 0) return out;
  const double du = frequency_step(p, n, dt);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t w = 0; w < n; ++w) {
    ComplexI acc;
    for (std::size_t x = 0; x < n; ++x) {
      acc += f[x] * std::polar(scale, -kernel_phase(p, n, dt, du, as_index(x),
                                                    as_index(w)));
    }
    out[w] = acc;
  }
  return out;
}

double energy(const QSignal2D& f) {
  double sum = 0.0;
  for (const auto& q : f.data()) sum += norm_sq(q);
  return sum;
}

QSignal2D modulate(const QSignal2D& f, std::size_t s1, std::size_t s2) {
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  QSignal2D out(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    const ComplexI m1 = std::polar(1.0, dft_phase(n1, as_index(s1), as_index(x1)));
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      const ComplexI m2 =
          std::polar(1.0, dft_phase(n2, as_index(s2), as_index(x2)));
      out(x1, x2) = left_mul_i(m1, right_mul_j(f(x1, x2), m2));
    }
  }
  return out;
}

QSignal2D modulation_rhs(const QSignal2D& f, const TransformConfig& cfg,
                         std::size_t s1, std::size_t s2) {
  require_shape(f, cfg);
  require_two_sided(cfg, "modulation_rhs");
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  if (s1 >= n1 || s2 >= n2) throw std::out_of_range("modulation shift");
  const auto& g = cfg.grid();
  const auto& p1 = cfg.p1();
  const auto& p2 = cfg.p2();
  const double e1 = static_cast<double>(s1);
  const double e2 = static_cast<double>(s2);

  QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    const double o1 = static_cast<double>(w1);
    const ComplexI left = std::polar(
        1.0, p1.c * (e1 * e1 - 2.0 * o1 * e1) * g.du1() * g.du1() -
                 p1.e * e1 * g.du1());
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      const double o2 = static_cast<double>(w2);
      const ComplexI right = std::polar(
          1.0, p2.c * (e2 * e2 - 2.0 * o2 * e2) * g.du2() * g.du2() -
                   p2.e * e2 * g.du2());
      const Quaternion shifted =
          forward_at(f, cfg, as_index(w1) - as_index(s1),
                     as_index(w2) - as_index(s2));
      out(w1, w2) = left_mul_i(left, right_mul_j(shifted, right));
    }
  }
  return out;
}

QSignal2D translation_rhs(const QSignal2D& f, const TransformConfig& cfg,
                          std::size_t k1, std::size_t k2) {
  require_shape(f, cfg);
  require_two_sided(cfg, "translation_rhs");
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  if (k1 >= n1 || k2 >= n2) throw std::out_of_range("translation shift");
  const auto& g = cfg.grid();
  const auto& p1 = cfg.p1();
  const auto& p2 = cfg.p2();
  const double dk1 = static_cast<double>(k1);
  const double dk2 = static_cast<double>(k2);

  QSignal2D inner(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    const ComplexI c1 = std::polar(
        1.0, -2.0 * p1.a * static_cast<double>(x1) * dk1 * g.dt1() * g.dt1());
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      const ComplexI c2 = std::polar(
          1.0, -2.0 * p2.a * static_cast<double>(x2) * dk2 * g.dt2() * g.dt2());
      inner(x1, x2) = left_mul_i(c1, right_mul_j(f(x1, x2), c2));
    }
  }

  QSignal2D out = forward_direct(inner, cfg);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    const ComplexI left = std::polar(
        1.0, -(time_chirp_phase(p1, g.dt1(), as_index(k1)) +
               dft_phase(n1, as_index(k1), as_index(w1))));
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      const ComplexI right = std::polar(
          1.0, -(time_chirp_phase(p2, g.dt2(), as_index(k2)) +
                 dft_phase(n2, as_index(k2), as_index(w2))));
      out(w1, w2) = left_mul_i(left, right_mul_j(out(w1, w2), right));
    }
  }
  return out;
}

QSignal2D conjugate_transform_decomposition(const QSignal2D& f,
                                            const TransformConfig& cfg) {
  require_shape(f, cfg);
  const QSignal2D q0 = forward_direct(component(f, 0), cfg);
  const QSignal2D q1 = forward_direct(component(f, 1), cfg);
  const QSignal2D q2 = forward_direct(component(f, 2), cfg);
  const QSignal2D q3 = forward_direct(component(f, 3), cfg);
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();

  QSignal2D out(f.n1(), f.n2());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out.data()[n] = q0.data()[n] - i * q1.data()[n] - q2.data()[n] * j -
                    i * q3.data()[n] * k;
  }
  return out;
}

}  // namespace dqqpft
