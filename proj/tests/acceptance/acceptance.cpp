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


// Acceptance checks. One PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dqqpft/fast.hpp"
#include "dqqpft/fft.hpp"
#include "dqqpft/qconv.hpp"
#include "dqqpft/transform.hpp"
#include "dqqpft_tools/bench.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

namespace {

using dqqpft::ParamSet;
using dqqpft::QSignal2D;
using dqqpft::TransformConfig;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

TransformConfig qft(std::size_t n1, std::size_t n2) {
  return TransformConfig::make(n1, n2, dqqpft::preset(dqqpft::presets::Qft{}));
}

double rel(const QSignal2D& a, const QSignal2D& ref) { return dqqpft::max_rel_deviation(a, ref); }

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("AC%d %s %s %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Case {
  TransformConfig cfg;
  QSignal2D f;
};

// 200 draws per size, parameters with |a..e| <= 2 and 0.1 <= |b| <= 2.
std::vector<Case> corpus() {
  const std::pair<std::size_t, std::size_t> sizes[] = {{2, 2}, {4, 4}, {6, 10}, {8, 8}, {16, 16}};
  gen::Gen g(2026);
  std::vector<Case> cases;
  for (auto [n1, n2] : sizes) {
    for (int t = 0; t < 200; ++t) {
      auto cfg = g.config(n1, n2);
      cases.push_back({cfg, g.signal(n1, n2)});
    }
  }
  return cases;
}

void ac1() {
  const QSignal2D f(2, 2, {35, 30, 25, 20});
  const QSignal2D want(2, 2, {55, 5, 10, 0});
  const auto cfg = qft(2, 2);
  const auto t0 = Clock::now();
  const QSignal2D direct = dqqpft::forward_direct(f, cfg);
  const QSignal2D fast = dqqpft::forward_fast(f, cfg);
  const double elapsed = seconds_since(t0);
  const double dev = std::max(dqqpft::max_abs_deviation(direct, want),
                              dqqpft::max_abs_deviation(fast, want));
  report(1, "example_reproduction", dev <= 1e-12 && elapsed < 1e-3,
         fmt("max_abs_dev=%.3e", dev) + fmt(" runtime_ms=%.4f", elapsed * 1e3));
}

void ac2_to_ac4(const std::vector<Case>& cases) {
  double fast_dev = 0;
  const auto t0 = Clock::now();
  std::vector<QSignal2D> spectra;
  spectra.reserve(cases.size());
  for (const auto& c : cases) {
    spectra.push_back(dqqpft::forward_direct(c.f, c.cfg));
    fast_dev = std::max(fast_dev, rel(dqqpft::forward_fast(c.f, c.cfg), spectra.back()));
  }
  const double elapsed = seconds_since(t0);
  report(2, "oracle_equivalence", fast_dev <= 1e-10 && elapsed < 30,
         fmt("draws=%.0f", double(cases.size())) + fmt(" max_rel_dev=%.3e", fast_dev) +
             fmt(" runtime_s=%.2f", elapsed));

  double round_dev = 0;
  for (std::size_t n = 0; n < cases.size(); ++n) {
    round_dev = std::max(round_dev, rel(dqqpft::inverse_direct(spectra[n], cases[n].cfg), cases[n].f));
  }
  report(3, "roundtrip", round_dev <= 1e-10, fmt("max_rel_dev=%.3e", round_dev));

  double energy_dev = 0;
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = 0;
  for (std::size_t n = 0; n < cases.size(); ++n) {
    const double e = dqqpft::energy(cases[n].f);
    const double E = dqqpft::energy(spectra[n]);
    energy_dev = std::max(energy_dev, std::abs(E - e) / e);
    ratio_lo = std::min(ratio_lo, E / e);
    ratio_hi = std::max(ratio_hi, E / e);
  }
  const QSignal2D example = dqqpft::forward_fast(QSignal2D(2, 2, {35, 30, 25, 20}), qft(2, 2));
  const double e_example = dqqpft::energy(example);
  const bool example_ok = std::abs(e_example - 3150.0) <= 1e-10 * 3150.0 &&
                          dqqpft::energy(QSignal2D(2, 2, {35, 30, 25, 20})) == 3150.0;
  report(4, "energy_preservation", energy_dev <= 1e-10 && example_ok,
         fmt("max_rel_dev=%.3e", energy_dev) + fmt(" example_energy=%.10g", e_example) +
             fmt(" measured_ratio=[%.15f", ratio_lo) + fmt(", %.15f]", ratio_hi));
}

void ac5() {
  gen::Gen g(5);
  double qft_dev = 0;
  double qlct_dev = 0;
  double qfrft_dev = 0;
  for (std::size_t n1 = 1; n1 <= 8; ++n1) {
    for (std::size_t n2 = 1; n2 <= 8; ++n2) {
      for (int t = 0; t < 3; ++t) {
        const QSignal2D f = g.signal(n1, n2);
        const double s = 1 / std::sqrt(double(n1 * n2));
        qft_dev = std::max(qft_dev, rel(dqqpft::forward_direct(f, qft(n1, n2)),
                                        s * oracle::dqft2(f)));

        dqqpft::presets::Qlct q{g.uniform(-2, 2), g.sign() * g.uniform(0.5, 2), g.uniform(-2, 2),
                                g.uniform(-2, 2), g.sign() * g.uniform(0.5, 2), g.uniform(-2, 2)};
        double dt1 = g.uniform(0.5, 2);
        double dt2 = g.uniform(0.5, 2);
        qlct_dev = std::max(
            qlct_dev,
            rel(dqqpft::forward_direct(f, TransformConfig::make(n1, n2, dqqpft::preset(q), dt1, dt2)),
                oracle::dqlct(f, q.a1, q.b1, q.d1, q.a2, q.b2, q.d2, dt1, dt2)));

        // |csc| <= 2 and |cot/2| <= 2 keep the sets inside the corpus bounds.
        const double t1 = g.sign() * g.uniform(kPi / 6, 5 * kPi / 6);
        const double t2 = g.sign() * g.uniform(kPi / 6, 5 * kPi / 6);
        dt1 = g.uniform(0.5, 2);
        dt2 = g.uniform(0.5, 2);
        qfrft_dev = std::max(
            qfrft_dev,
            rel(dqqpft::forward_direct(
                    f, TransformConfig::make(n1, n2, dqqpft::preset(dqqpft::presets::Qfrft{t1, t2}),
                                             dt1, dt2)),
                oracle::dqfrft(f, t1, t2, dt1, dt2)));
      }
    }
  }
  report(5, "special_case_collapse", std::max({qft_dev, qlct_dev, qfrft_dev}) <= 1e-12,
         fmt("qft_max_rel_dev=%.3e", qft_dev) + fmt(" qlct_max_rel_dev=%.3e", qlct_dev) +
             fmt(" qfrft_max_rel_dev=%.3e", qfrft_dev));
}

void ac6() {
  gen::Gen g(6);
  double dev = 0;
  for (std::size_t n1 = 1; n1 <= 8; ++n1) {
    for (std::size_t n2 = 1; n2 <= 8; ++n2) {
      for (int t = 0; t < 5; ++t) {
        const auto cfg = g.config(n1, n2);
        const QSignal2D f = g.signal(n1, n2);
        const std::size_t s1 = g.index(0, n1 - 1);
        const std::size_t s2 = g.index(0, n2 - 1);
        dev = std::max(dev, rel(dqqpft::modulation_rhs(f, cfg, s1, s2),
                                dqqpft::forward_direct(dqqpft::modulate(f, s1, s2), cfg)));
      }
    }
  }
  report(6, "modulation_theorem", dev <= 1e-10, fmt("max_rel_dev=%.3e", dev));
}

void ac7() {
  gen::Gen g(7);
  double circular_dev = 0;
  double strict_dev = 0;
  double linear_dev = 0;
  double chirped_circular_dev = 0;
  for (std::size_t n1 = 1; n1 <= 8; ++n1) {
    for (std::size_t n2 = 1; n2 <= 8; ++n2) {
      for (int t = 0; t < 5; ++t) {
        const std::size_t k1 = g.index(0, n1 - 1);
        const std::size_t k2 = g.index(0, n2 - 1);
        QSignal2D f = g.signal(n1, n2);

        // a = 0 on both axes; the remaining parameters are drawn freely.
        ParamSet p1 = g.params();
        ParamSet p2 = g.params();
        p1.a = p2.a = 0;
        auto cfg = g.config(n1, n2, p1, p2);
        circular_dev = std::max(circular_dev, rel(dqqpft::translation_rhs(f, cfg, k1, k2),
                                                  dqqpft::forward_direct(dqqpft::circular_shift(f, k1, k2), cfg)));

        // a = d = 0: the whole time chirp is trivial.
        p1.d = p2.d = 0;
        cfg = g.config(n1, n2, p1, p2);
        strict_dev = std::max(strict_dev, rel(dqqpft::translation_rhs(f, cfg, k1, k2),
                                              dqqpft::forward_direct(dqqpft::circular_shift(f, k1, k2), cfg)));

        cfg = g.config(n1, n2);
        chirped_circular_dev = std::max(
            chirped_circular_dev, rel(dqqpft::translation_rhs(f, cfg, k1, k2),
                                      dqqpft::forward_direct(dqqpft::circular_shift(f, k1, k2), cfg)));
        for (std::size_t x1 = 0; x1 < n1; ++x1) {
          for (std::size_t x2 = 0; x2 < n2; ++x2) {
            if (x1 + k1 >= n1 || x2 + k2 >= n2) f(x1, x2) = dqqpft::Quaternion();
          }
        }
        if (dqqpft::max_abs(f) == 0) continue;
        linear_dev = std::max(linear_dev, rel(dqqpft::translation_rhs(f, cfg, k1, k2),
                                              dqqpft::forward_direct(dqqpft::linear_shift(f, k1, k2), cfg)));
      }
    }
  }
  report(7, "translation_theorem", circular_dev <= 1e-10 && linear_dev <= 1e-10,
         fmt("a0_circular_max_rel_dev=%.3e", circular_dev) +
             fmt(" a0_d0_circular_max_rel_dev=%.3e", strict_dev) +
             fmt(" nonwrapping_max_rel_dev=%.3e", linear_dev) +
             fmt(" diagnostic_chirped_circular_max_rel_dev=%.3e", chirped_circular_dev));
}

QSignal2D circular(const QSignal2D& f, const QSignal2D& g) {
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t x1 = 0; x1 < f.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < f.n2(); ++x2) {
      oracle::M2 acc{};
      for (std::size_t z1 = 0; z1 < f.n1(); ++z1) {
        for (std::size_t z2 = 0; z2 < f.n2(); ++z2) {
          acc = acc + oracle::to_matrix(f(z1, z2)) *
                          oracle::to_matrix(g((x1 + f.n1() - z1) % f.n1(), (x2 + f.n2() - z2) % f.n2()));
        }
      }
      out(x1, x2) = oracle::from_matrix(acc);
    }
  }
  return out;
}

void ac8() {
  gen::Gen g(8);
  double delta_dev = 0;
  double circular_dev = 0;
  double theorem_dev = 0;
  double general_dev = 0;
  bool regimes_ok = true;
  for (std::size_t n1 = 1; n1 <= 8; ++n1) {
    for (std::size_t n2 = 1; n2 <= 8; ++n2) {
      for (int t = 0; t < 3; ++t) {
        auto cfg = g.config(n1, n2);
        const QSignal2D f = g.signal(n1, n2);
        const QSignal2D h = g.signal(n1, n2);
        const QSignal2D d = dqqpft::delta(n1, n2);
        delta_dev = std::max({delta_dev, dqqpft::max_abs_deviation(dqqpft::qp_convolve(f, d, cfg), f),
                              dqqpft::max_abs_deviation(dqqpft::qp_convolve(d, f, cfg), f)});

        ParamSet p1 = g.params();
        ParamSet p2 = g.params();
        p1.a = p2.a = 0;
        circular_dev = std::max(circular_dev,
                                rel(dqqpft::qp_convolve(f, h, g.config(n1, n2, p1, p2)), circular(f, h)));

        // Complex-subfield f with a real-spectrum g.
        const QSignal2D fc = g.i_complex_signal(n1, n2);
        p1.d = p2.d = 0;
        cfg = g.config(n1, n2, p1, p2);
        const QSignal2D gr = dqqpft::inverse_direct(g.real_signal(n1, n2), cfg);
        auto r = dqqpft::conv_theorem_check(fc, gr, cfg);
        regimes_ok = regimes_ok && r.regime == dqqpft::ConvRegime::verified;
        theorem_dev = std::max(theorem_dev, r.max_rel_deviation);

        ParamSet q1 = g.params();
        ParamSet q2 = g.params();
        q1.c = q1.e = q2.c = q2.e = 0;
        cfg = g.config(n1, n2, q1, q2);
        QSignal2D scaled(n1, n2);
        scaled(0, 0) = g.uniform(0.5, 2);
        r = dqqpft::conv_theorem_check(fc, scaled, cfg);
        regimes_ok = regimes_ok && r.regime == dqqpft::ConvRegime::verified;
        theorem_dev = std::max(theorem_dev, r.max_rel_deviation);

        cfg = g.config(n1, n2);
        r = dqqpft::conv_theorem_check(f, dqqpft::inverse_direct(g.real_signal(n1, n2), cfg), cfg);
        general_dev = std::max(general_dev, r.max_rel_deviation);
      }
    }
  }
  report(8, "convolution",
         delta_dev == 0 && circular_dev <= 1e-12 && theorem_dev <= 1e-10 && regimes_ok,
         fmt("delta_max_abs_dev=%.3e", delta_dev) + fmt(" a0_circular_max_rel_dev=%.3e", circular_dev) +
             fmt(" verified_regime_max_rel_dev=%.3e", theorem_dev) +
             fmt(" diagnostic_general_max_rel_dev=%.3e", general_dev));
}

void ac9() {
  gen::Gen g(9);
  double dev = 0;
  for (std::size_t n1 = 1; n1 <= 16; ++n1) {
    for (std::size_t n2 = 1; n2 <= 16; ++n2) {
      const dqqpft::CSignal2D x = g.complex_signal(n1, n2);
      const dqqpft::CSignal2D X = dqqpft::fft2_complex(x, dqqpft::Direction::forward);
      const dqqpft::CSignal2D ref = oracle::dft2(x);
      for (std::size_t n = 0; n < x.size(); ++n) dev = std::max(dev, std::abs(X.data()[n] - ref.data()[n]));
    }
  }
  report(9, "fft_correctness", dev <= 1e-11, fmt("sizes=256 max_abs_dev=%.3e", dev));
}

void ac10() {
  const auto t0 = Clock::now();
  const auto rows = dqqpft::tools::run_bench({16, 32, 64});
  const double elapsed = seconds_since(t0);
  double speedup = 0;
  for (const auto& r : rows) {
    if (r.n == 64) speedup = r.speedup;
  }
  report(10, "performance", speedup >= 10 && elapsed < 60,
         fmt("speedup_64=%.1f", speedup) + fmt(" bench_s=%.2f", elapsed));
}

}  // namespace

int main() {
  ac1();
  const auto cases = corpus();
  ac2_to_ac4(cases);
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  return failures == 0 ? 0 : 1;
}
