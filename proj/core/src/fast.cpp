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

#include "dqqpft/fast.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dqqpft {
namespace {

const TransformConfig& checked(const TransformConfig& cfg) {
  if (cfg.side() != Side::two_sided) {
    throw std::invalid_argument("the FFT path handles two-sided transforms only");
  }
  return cfg;
}

void require_shape(const QSignal2D& f, std::size_t n1, std::size_t n2) {
  if (f.n1() != n1 || f.n2() != n2) {
    throw DimensionError("signal is " + std::to_string(f.n1()) + "x" +
                         std::to_string(f.n2()) + " but the plan is " +
                         std::to_string(n1) + "x" + std::to_string(n2));
  }
}

std::size_t negate(std::size_t w, std::size_t n) { return (n - w) % n; }

constexpr ComplexI kI{0.0, 1.0};

}  // namespace

FastPlan::FastPlan(const TransformConfig& cfg)
    : cfg_(checked(cfg)),
      fft_(cfg.n1(), cfg.n2()),
      time1_(cfg.n1()),
      time2_(cfg.n2()),
      freq1_(cfg.n1()),
      freq2_(cfg.n2()) {
  const auto& g = cfg_.grid();
  for (std::size_t n = 0; n < cfg_.n1(); ++n) {
    const auto idx = static_cast<long long>(n);
    time1_[n] = std::polar(1.0, -time_chirp_phase(cfg_.p1(), g.dt1(), idx));
    freq1_[n] = std::polar(1.0, -frequency_chirp_phase(cfg_.p1(), g.du1(), idx));
  }
  for (std::size_t n = 0; n < cfg_.n2(); ++n) {
    const auto idx = static_cast<long long>(n);
    time2_[n] = std::polar(1.0, -time_chirp_phase(cfg_.p2(), g.dt2(), idx));
    freq2_[n] = std::polar(1.0, -frequency_chirp_phase(cfg_.p2(), g.du2(), idx));
  }
}

QSignal2D make_psi(const QSignal2D& f, const FastPlan& plan) {
  const std::size_t n1 = plan.config().n1();
  const std::size_t n2 = plan.config().n2();
  require_shape(f, n1, n2);
  const auto a1 = plan.time_chirp1();
  const auto a2 = plan.time_chirp2();
  QSignal2D psi(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      psi(x1, x2) = left_mul_i(a1[x1], right_mul_j(f(x1, x2), a2[x2]));
    }
  }
  return psi;
}

QSignal2D dqft2_via_fft(const QSignal2D& psi, const Fft2Plan& fft) {
  const std::size_t n1 = fft.n1();
  const std::size_t n2 = fft.n2();
  require_shape(psi, n1, n2);

  CSignal2D c1(n1, n2);
  CSignal2D c2(n1, n2);
  for (std::size_t n = 0; n < psi.size(); ++n) {
    const auto [t, h] = symplectic_split(psi.data()[n]);
    c1.data()[n] = t;
    c2.data()[n] = std::conj(h);
  }
  fft.transform(c1, Direction::forward);
  fft.transform(c2, Direction::forward);

  QSignal2D out(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      const std::size_t m2 = negate(w2, n2);
      const ComplexI a = c1(w1, w2);
      const ComplexI am = c1(w1, m2);
      const ComplexI b = c2(w1, w2);
      const ComplexI bm = c2(w1, m2);
      const ComplexI p = 0.5 * (a + am) + 0.5 * kI * (b - bm);
      const ComplexI q = 0.5 * (b + bm) - 0.5 * kI * (a - am);
      out(w1, w2) = Quaternion(p.real(), p.imag(), q.real(), q.imag());
    }
  }
  return out;
}

QSignal2D dqft2_via_fft(const QSignal2D& psi) {
  return dqft2_via_fft(psi, Fft2Plan(psi.n1(), psi.n2()));
}

QSignal2D forward_fast(const QSignal2D& f, const FastPlan& plan) {
  QSignal2D spectrum = dqft2_via_fft(make_psi(f, plan), plan.fft());
  const std::size_t n1 = spectrum.n1();
  const std::size_t n2 = spectrum.n2();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
  const auto e1 = plan.freq_chirp1();
  const auto e2 = plan.freq_chirp2();
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    const ComplexI left = scale * e1[w1];
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      spectrum(w1, w2) = left_mul_i(left, right_mul_j(spectrum(w1, w2), e2[w2]));
    }
  }
  return spectrum;
}

QSignal2D forward_fast(const QSignal2D& f, const TransformConfig& cfg) {
  return forward_fast(f, FastPlan(cfg));
}

QSignal2D inverse_fast(const QSignal2D& spectrum, const FastPlan& plan) {
  const std::size_t n1 = plan.config().n1();
  const std::size_t n2 = plan.config().n2();
  require_shape(spectrum, n1, n2);
  const auto a1 = plan.time_chirp1();
  const auto a2 = plan.time_chirp2();
  const auto e1 = plan.freq_chirp1();
  const auto e2 = plan.freq_chirp2();

  QSignal2D dechirped(n1, n2);
  for (std::size_t w1 = 0; w1 < n1; ++w1) {
    for (std::size_t w2 = 0; w2 < n2; ++w2) {
      dechirped(w1, w2) = left_mul_i(std::conj(e1[w1]),
                                     right_mul_j(spectrum(w1, w2), std::conj(e2[w2])));
    }
  }
  const QSignal2D d = dqft2_via_fft(dechirped, plan.fft());

  const double scale = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
  QSignal2D out(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    const ComplexI left = scale * std::conj(a1[x1]);
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      out(x1, x2) = left_mul_i(
          left, right_mul_j(d(negate(x1, n1), negate(x2, n2)), std::conj(a2[x2])));
    }
  }
  return out;
}

QSignal2D inverse_fast(const QSignal2D& spectrum, const TransformConfig& cfg) {
  return inverse_fast(spectrum, FastPlan(cfg));
}

SymplecticSpectra symplectic_spectra(const QSignal2D& psi, const Fft2Plan& fft) {
  const std::size_t n1 = fft.n1();
  const std::size_t n2 = fft.n2();
  require_shape(psi, n1, n2);
  SymplecticSpectra out{CSignal2D(n1, n2), CSignal2D(n1, n2)};
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      out.tilde(x1, x2) = symplectic_split(psi(x1, x2)).first;
      out.hat_reversed(x1, x2) = symplectic_split(psi(negate(x1, n1), x2)).second;
    }
  }
  fft.transform(out.tilde, Direction::forward);
  fft.transform(out.hat_reversed, Direction::forward);
  return out;
}

Quaternion k_recombination(const CSignal2D& tilde,
                           const CSignal2D& hat_reversed, const FastPlan& plan,
                           std::size_t w1, std::size_t w2) {
  const std::size_t n1 = plan.config().n1();
  const std::size_t n2 = plan.config().n2();
  if (w1 >= n1 || w2 >= n2) throw std::out_of_range("k_recombination index");
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  auto combined = [&](std::size_t r, std::size_t c) {
    return embed_i(tilde(r, c)) + j * embed_i(hat_reversed(r, c));
  };
  const Quaternion bracket = (Quaternion(1.0) - k) * combined(w1, w2) +
                             (Quaternion(1.0) + k) * combined(w1, negate(w2, n2));
  const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(n1 * n2)));
  return scale * left_mul_i(plan.freq_chirp1()[w1],
                            right_mul_j(bracket, plan.freq_chirp2()[w2]));
}

QSignal2D forward_k_recombination(const QSignal2D& f, const FastPlan& plan) {
  const SymplecticSpectra spectra =
      symplectic_spectra(make_psi(f, plan), plan.fft());
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t w1 = 0; w1 < f.n1(); ++w1) {
    for (std::size_t w2 = 0; w2 < f.n2(); ++w2) {
      out(w1, w2) =
          k_recombination(spectra.tilde, spectra.hat_reversed, plan, w1, w2);
    }
  }
  return out;
}

}  // namespace dqqpft
