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


#include "dqqpft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dqqpft/fast.hpp"
#include "dqqpft/fft.hpp"
#include "dqqpft/params.hpp"
#include "dqqpft/qconv.hpp"
#include "dqqpft/quaternion.hpp"
#include "dqqpft/signal.hpp"
#include "dqqpft/transform.hpp"

namespace dqqpft {
namespace {

constexpr double kPi = std::numbers::pi;

// Portable generator: mt19937_64 is fully specified and the real mapping
// below avoids the implementation-defined standard distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
  }

  // Inclusive range.
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
  }

  double sign() { return (rng_() & 1) ? 1.0 : -1.0; }

  Quaternion quaternion() {
    return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
  }

  QSignal2D signal(std::size_t n1, std::size_t n2) {
    QSignal2D f(n1, n2);
    for (auto& q : f.data()) q = quaternion();
    return f;
  }

  QSignal2D i_complex_signal(std::size_t n1, std::size_t n2) {
    QSignal2D f(n1, n2);
    for (auto& q : f.data()) q = Quaternion(uniform(-1, 1), uniform(-1, 1), 0, 0);
    return f;
  }

  QSignal2D real_signal(std::size_t n1, std::size_t n2) {
    QSignal2D f(n1, n2);
    for (auto& q : f.data()) q = Quaternion(uniform(-1, 1));
    return f;
  }

  // |a|, |c|, |d|, |e| <= 2 and 0.1 <= |b| <= 2.
  ParamSet params() {
    ParamSet p;
    p.a = uniform(-2, 2);
    p.b = sign() * uniform(0.1, 2);
    p.c = uniform(-2, 2);
    p.d = uniform(-2, 2);
    p.e = uniform(-2, 2);
    return p;
  }

  TransformConfig config(std::size_t n1, std::size_t n2, const ParamSet& p1,
                         const ParamSet& p2, Side side = Side::two_sided) {
    return TransformConfig::make(n1, n2, uniform(0.5, 2), uniform(0.5, 2), p1,
                                 p2, side);
  }

  TransformConfig config(std::size_t n1, std::size_t n2,
                         Side side = Side::two_sided) {
    const ParamSet p1 = params();
    const ParamSet p2 = params();
    return config(n1, n2, p1, p2, side);
  }

 private:
  std::mt19937_64 rng_;
};

// max over draws that keeps NaN sticky.
void accumulate(double& acc, double v) {
  if (std::isnan(acc)) return;
  if (std::isnan(v) || v > acc) acc = v;
}

double rel(const QSignal2D& a, const QSignal2D& b) { return max_rel_deviation(a, b); }

// Sum_{x1,x2} embed_i(k1(x1, w1)) * f(x1, x2) * embed_j(k2(x2, w2)) with
// full quaternion products, for kernels given as callables.
QSignal2D sandwich(const QSignal2D& f,
                   const std::function<ComplexI(std::size_t, std::size_t)>& k1,
                   const std::function<ComplexI(std::size_t, std::size_t)>& k2) {
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t w1 = 0; w1 < f.n1(); ++w1) {
    for (std::size_t w2 = 0; w2 < f.n2(); ++w2) {
      Quaternion acc;
      for (std::size_t x1 = 0; x1 < f.n1(); ++x1) {
        for (std::size_t x2 = 0; x2 < f.n2(); ++x2) {
          acc = acc + embed_i(k1(x1, w1)) * f(x1, x2) * embed_j(k2(x2, w2));
        }
      }
      out(w1, w2) = acc;
    }
  }
  return out;
}

// Discrete fractional Fourier kernel with angle theta on n samples.
ComplexI frft_kernel(double theta, std::size_t n, double dt, std::size_t x,
                     std::size_t w) {
  const double cot = std::cos(theta) / std::sin(theta);
  const double du = 2.0 * kPi / (std::sin(theta) * static_cast<double>(n) * dt);
  const double t = static_cast<double>(x) * dt;
  const double u = static_cast<double>(w) * du;
  const double dft = 2.0 * kPi * static_cast<double>((x * w) % n) / static_cast<double>(n);
  const double phase = -0.5 * cot * t * t + dft - 0.5 * cot * u * u;
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)), -phase);
}

// Discrete linear canonical kernel for (a, b, d) on n samples.
ComplexI lct_kernel(double a, double b, double d, std::size_t n, double dt,
                    std::size_t x, std::size_t w) {
  const double du = 2.0 * kPi / (b * static_cast<double>(n) * dt);
  const double t = static_cast<double>(x) * dt;
  const double u = static_cast<double>(w) * du;
  const double dft = 2.0 * kPi * static_cast<double>((x * w) % n) / static_cast<double>(n);
  const double phase = -a / (2.0 * b) * t * t + dft - d / (2.0 * b) * u * u;
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)), -phase);
}

std::vector<ComplexI> naive_dft(const std::vector<ComplexI>& x) {
  const std::size_t n = x.size();
  std::vector<ComplexI> out(n);
  for (std::size_t w = 0; w < n; ++w) {
    ComplexI acc;
    for (std::size_t t = 0; t < n; ++t) {
      acc += x[t] * std::polar(1.0, -2.0 * kPi * static_cast<double>((t * w) % n) /
                                        static_cast<double>(n));
    }
    out[w] = acc;
  }
  return out;
}

CSignal2D naive_dft2(const CSignal2D& x) {
  CSignal2D out = x;
  for (std::size_t r = 0; r < x.n1(); ++r) {
    const auto row = naive_dft({out.row(r).begin(), out.row(r).end()});
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  std::vector<ComplexI> column(x.n1());
  for (std::size_t c = 0; c < x.n2(); ++c) {
    for (std::size_t r = 0; r < x.n1(); ++r) column[r] = out(r, c);
    const auto col = naive_dft(column);
    for (std::size_t r = 0; r < x.n1(); ++r) out(r, c) = col[r];
  }
  return out;
}

double c_max_abs(const CSignal2D& x) {
  double m = 0.0;
  for (const auto& v : x.data()) m = std::max(m, std::abs(v));
  return m;
}

double c_rel(const CSignal2D& a, const CSignal2D& b) {
  double m = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    m = std::max(m, std::abs(a.data()[s] - b.data()[s]));
  }
  return m / std::max(c_max_abs(b), std::numeric_limits<double>::min());
}

QSignal2D circular_convolution(const QSignal2D& f, const QSignal2D& g) {
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t x1 = 0; x1 < f.n1(); ++x1) {
    for (std::size_t x2 = 0; x2 < f.n2(); ++x2) {
      Quaternion acc;
      for (std::size_t z1 = 0; z1 < f.n1(); ++z1) {
        for (std::size_t z2 = 0; z2 < f.n2(); ++z2) {
          acc = acc + f(z1, z2) * g((x1 + f.n1() - z1) % f.n1(),
                                    (x2 + f.n2() - z2) % f.n2());
        }
      }
      out(x1, x2) = acc;
    }
  }
  return out;
}

// Modulation right-hand side with the shifted frequency reduced mod n.
QSignal2D modulation_rhs_reduced(const QSignal2D& f, const TransformConfig& cfg,
                                 std::size_t s1, std::size_t s2) {
  const QSignal2D spectrum = forward_direct(f, cfg);
  const auto& g = cfg.grid();
  const double q1 = static_cast<double>(s1);
  const double q2 = static_cast<double>(s2);
  QSignal2D out(f.n1(), f.n2());
  for (std::size_t w1 = 0; w1 < f.n1(); ++w1) {
    const double v1 = static_cast<double>(w1);
    const ComplexI left = std::polar(
        1.0, cfg.p1().c * (q1 * q1 - 2 * v1 * q1) * g.du1() * g.du1() -
                 cfg.p1().e * q1 * g.du1());
    for (std::size_t w2 = 0; w2 < f.n2(); ++w2) {
      const double v2 = static_cast<double>(w2);
      const ComplexI right = std::polar(
          1.0, cfg.p2().c * (q2 * q2 - 2 * v2 * q2) * g.du2() * g.du2() -
                   cfg.p2().e * q2 * g.du2());
      const Quaternion& F = spectrum((w1 + f.n1() - s1) % f.n1(),
                                     (w2 + f.n2() - s2) % f.n2());
      out(w1, w2) = left_mul_i(left, right_mul_j(F, right));
    }
  }
  return out;
}

std::string format_e(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << v;
  return os.str();
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : opt_(options) {}

  std::size_t draws() const { return opt_.draws; }

  std::size_t size(Sampler& s, std::size_t cap = 0) const {
    const std::size_t hi = cap == 0 ? opt_.max_size : std::min(cap, opt_.max_size);
    return s.index(std::min(opt_.min_size, hi), hi);
  }

  // draw() returns the deviation of one random trial.
  void property(const std::string& name, double tolerance,
                const std::function<double(Sampler&)>& draw) {
    property_n(name, tolerance, opt_.draws, draw);
  }

  void property_n(const std::string& name, double tolerance, std::size_t trials,
                  const std::function<double(Sampler&)>& draw) {
    Sampler s(next_seed());
    double dev = 0.0;
    for (std::size_t t = 0; t < trials; ++t) accumulate(dev, draw(s));
    report_.properties.push_back({name, dev, tolerance, dev <= tolerance});
  }

  void diagnostic(const std::string& name,
                  const std::function<double(Sampler&)>& draw,
                  const std::string& detail = {}) {
    Sampler s(next_seed());
    double dev = 0.0;
    for (std::size_t t = 0; t < opt_.draws; ++t) accumulate(dev, draw(s));
    report_.diagnostics.push_back({name, dev, detail});
  }

  void diagnostic_value(const std::string& name, double dev, const std::string& detail) {
    report_.diagnostics.push_back({name, dev, detail});
  }

  std::uint64_t next_seed() { return opt_.seed + 0x9E3779B97F4A7C15ULL * ++stream_; }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyOptions opt_;
  std::uint64_t stream_ = 0;
  VerifyReport report_;
};

void quaternion_properties(Suite& suite) {
  suite.property("quaternion_norm_multiplicative", 1e-12, [](Sampler& s) {
    const Quaternion p = s.quaternion();
    const Quaternion q = s.quaternion();
    const double expect = norm(p) * norm(q);
    return std::abs(norm(p * q) - expect) / expect;
  });
  suite.property("quaternion_scalar_cyclic", 1e-12, [](Sampler& s) {
    const Quaternion f = s.quaternion();
    const Quaternion g = s.quaternion();
    const Quaternion h = s.quaternion();
    const double fgh = scalar_part(f * g * h);
    return std::max(std::abs(fgh - scalar_part(h * f * g)),
                    std::abs(fgh - scalar_part(g * h * f)));
  });
  suite.property("quaternion_conjugate_reverses_products", 1e-12, [](Sampler& s) {
    const Quaternion p = s.quaternion();
    const Quaternion q = s.quaternion();
    return norm(conjugate(p * q) - conjugate(q) * conjugate(p));
  });
  suite.property("quaternion_complex_commutes_past_j", 0.0, [](Sampler& s) {
    const ComplexI x(s.uniform(-1, 1), s.uniform(-1, 1));
    const Quaternion j = Quaternion::j();
    return norm(embed_i(x) * j - j * embed_i(std::conj(x)));
  });
  suite.property("symplectic_join_inverts_split", 0.0, [](Sampler& s) {
    const Quaternion q = s.quaternion();
    const auto [t, h] = symplectic_split(q);
    return norm(symplectic_join(t, h) - q) +
           norm(embed_i(t) + Quaternion::j() * embed_i(h) - q);
  });
}

void transform_properties(Suite& suite) {
  suite.property_n("kernel_unit_modulus", 1e-14, 5 * suite.draws(), [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const std::size_t x1 = s.index(0, n1 - 1);
    const std::size_t w1 = s.index(0, n1 - 1);
    const std::size_t x2 = s.index(0, n2 - 1);
    const std::size_t w2 = s.index(0, n2 - 1);
    return std::max(
        std::abs(std::abs(left_kernel(cfg, x1, w1)) * std::sqrt(double(n1)) - 1.0),
        std::abs(std::abs(right_kernel(cfg, x2, w2)) * std::sqrt(double(n2)) - 1.0));
  });
  suite.property("linearity", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D g = s.signal(n1, n2);
    const double alpha = s.uniform(-2, 2);
    const double beta = s.uniform(-2, 2);
    return rel(forward_direct(alpha * f + beta * g, cfg),
               alpha * forward_direct(f, cfg) + beta * forward_direct(g, cfg));
  });
  suite.property("via_dqft_matches_direct", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    return rel(forward_via_dqft(f, cfg), forward_direct(f, cfg));
  });
  suite.property("roundtrip_direct", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    return rel(inverse_direct(forward_direct(f, cfg), cfg), f);
  });
  suite.property("roundtrip_sided", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const Side side = s.sign() > 0 ? Side::left_sided : Side::right_sided;
    const TransformConfig cfg = s.config(n1, n2, side);
    const QSignal2D f = s.signal(n1, n2);
    return rel(inverse_direct(forward_direct(f, cfg), cfg), f);
  });
  suite.property("energy_preserved", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const double e = energy(f);
    return std::abs(energy(forward_direct(f, cfg)) - e) / e;
  });
  suite.property("qft_collapse", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg =
        TransformConfig::make(n1, n2, preset(presets::Qft{}));
    const QSignal2D f = s.signal(n1, n2);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n1 * n2));
    return rel(forward_direct(f, cfg), scale * dqft2(f));
  });
  suite.property("qfrft_collapse", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    // |csc| <= 2 and |cot| / 2 <= 2, the same bounds as the general draws.
    const double t1 = s.sign() * s.uniform(kPi / 6, 5 * kPi / 6);
    const double t2 = s.sign() * s.uniform(kPi / 6, 5 * kPi / 6);
    const double dt1 = s.uniform(0.5, 2);
    const double dt2 = s.uniform(0.5, 2);
    const TransformConfig cfg =
        TransformConfig::make(n1, n2, preset(presets::Qfrft{t1, t2}), dt1, dt2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D oracle = sandwich(
        f, [&](std::size_t x, std::size_t w) { return frft_kernel(t1, n1, dt1, x, w); },
        [&](std::size_t x, std::size_t w) { return frft_kernel(t2, n2, dt2, x, w); });
    return rel(forward_direct(f, cfg), oracle);
  });
  suite.property("qlct_collapse", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    presets::Qlct q;
    q.a1 = s.uniform(-2, 2);
    q.b1 = s.sign() * s.uniform(0.5, 2);
    q.d1 = s.uniform(-2, 2);
    q.a2 = s.uniform(-2, 2);
    q.b2 = s.sign() * s.uniform(0.5, 2);
    q.d2 = s.uniform(-2, 2);
    const double dt1 = s.uniform(0.5, 2);
    const double dt2 = s.uniform(0.5, 2);
    const TransformConfig cfg = TransformConfig::make(n1, n2, preset(q), dt1, dt2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D oracle = sandwich(
        f,
        [&](std::size_t x, std::size_t w) { return lct_kernel(q.a1, q.b1, q.d1, n1, dt1, x, w); },
        [&](std::size_t x, std::size_t w) { return lct_kernel(q.a2, q.b2, q.d2, n2, dt2, x, w); });
    return rel(forward_direct(f, cfg), oracle);
  });
  suite.property("modulation", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const std::size_t s1 = s.index(0, n1 - 1);
    const std::size_t s2 = s.index(0, n2 - 1);
    return rel(modulation_rhs(f, cfg, s1, s2), forward_direct(modulate(f, s1, s2), cfg));
  });
  suite.property("translation_circular_trivial_time_chirp", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    ParamSet p1 = s.params();
    ParamSet p2 = s.params();
    p1.a = p1.d = p2.a = p2.d = 0.0;
    const TransformConfig cfg = s.config(n1, n2, p1, p2);
    const QSignal2D f = s.signal(n1, n2);
    const std::size_t k1 = s.index(0, n1 - 1);
    const std::size_t k2 = s.index(0, n2 - 1);
    return rel(translation_rhs(f, cfg, k1, k2),
               forward_direct(circular_shift(f, k1, k2), cfg));
  });
  suite.property("translation_linear_no_wrap", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const std::size_t k1 = s.index(0, n1 - 1);
    const std::size_t k2 = s.index(0, n2 - 1);
    QSignal2D f = s.signal(n1, n2);
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        if (x1 + k1 >= n1 || x2 + k2 >= n2) f(x1, x2) = Quaternion();
      }
    }
    return rel(translation_rhs(f, cfg, k1, k2),
               forward_direct(linear_shift(f, k1, k2), cfg));
  });
  suite.property("conjugate_decomposition_single_component", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    // Real f, i g and j g, where the literal decomposition is exact.
    const QSignal2D g = s.real_signal(n1, n2);
    const Quaternion units[3] = {Quaternion(1.0), Quaternion::i(), Quaternion::j()};
    double dev = 0.0;
    for (const Quaternion& u : units) {
      const QSignal2D f = left_mul(u, g);
      accumulate(dev, rel(conjugate_transform_decomposition(f, cfg),
                          forward_direct(conjugate(f), cfg)));
    }
    return dev;
  });
}

void fast_properties(Suite& suite) {
  // Exhaustive over every shape in {1..16}^2; independent of draws.
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t n1 = 1; n1 <= 16; ++n1) {
    for (std::size_t n2 = 1; n2 <= 16; ++n2) shapes.emplace_back(n1, n2);
  }
  std::size_t at = 0;
  suite.property_n("fft_matches_dft", 1e-11, shapes.size(), [&](Sampler& s) {
    const auto [n1, n2] = shapes[at++];
    CSignal2D x(n1, n2);
    for (auto& v : x.data()) v = ComplexI(s.uniform(-1, 1), s.uniform(-1, 1));
    return c_rel(fft2_complex(x, Direction::forward), naive_dft2(x));
  });
  at = 0;
  suite.property_n("fft_roundtrip", 1e-11, shapes.size(), [&](Sampler& s) {
    const auto [n1, n2] = shapes[at++];
    CSignal2D x(n1, n2);
    for (auto& v : x.data()) v = ComplexI(s.uniform(-1, 1), s.uniform(-1, 1));
    return c_rel(fft2_complex(fft2_complex(x, Direction::forward), Direction::inverse), x);
  });
  suite.property("chirp_unit_modulus", 1e-14, [&](Sampler& s) {
    const FastPlan plan(s.config(suite.size(s), suite.size(s)));
    double dev = 0.0;
    for (auto table : {plan.time_chirp1(), plan.time_chirp2(), plan.freq_chirp1(),
                       plan.freq_chirp2()}) {
      for (const ComplexI& v : table) accumulate(dev, std::abs(std::abs(v) - 1.0));
    }
    return dev;
  });
  suite.property("psi_energy_preserved", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const FastPlan plan(s.config(n1, n2));
    const QSignal2D f = s.signal(n1, n2);
    const double e = energy(f);
    return std::abs(energy(make_psi(f, plan)) - e) / e;
  });
  suite.property("dqft2_via_fft_matches_dqft2", 1e-10, [&](Sampler& s) {
    const QSignal2D psi = s.signal(suite.size(s), suite.size(s));
    return rel(dqft2_via_fft(psi), dqft2(psi));
  });
  suite.property("fast_matches_direct", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    return rel(forward_fast(f, cfg), forward_direct(f, cfg));
  });
  suite.property("roundtrip_fast", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const FastPlan plan(s.config(n1, n2));
    const QSignal2D f = s.signal(n1, n2);
    return rel(inverse_fast(forward_fast(f, plan), plan), f);
  });
}

void conv_properties(Suite& suite) {
  suite.property("conv_delta_identity", 0.0, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D d = delta(n1, n2);
    return std::max(max_abs_deviation(qp_convolve(f, d, cfg), f),
                    max_abs_deviation(qp_convolve(d, f, cfg), f));
  });
  suite.property("conv_trivial_time_chirp_is_circular", 1e-12, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    ParamSet p1 = s.params();
    ParamSet p2 = s.params();
    p1.a = p2.a = 0.0;
    const TransformConfig cfg = s.config(n1, n2, p1, p2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D g = s.signal(n1, n2);
    return rel(qp_convolve(f, g, cfg), circular_convolution(f, g));
  });
  suite.property("conv_theorem_verified_regime", 1e-10, [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    ParamSet p1 = s.params();
    ParamSet p2 = s.params();
    const QSignal2D f = s.i_complex_signal(n1, n2);
    QSignal2D g(n1, n2);
    std::optional<TransformConfig> cfg;
    if (s.sign() > 0) {
      // No time chirp; g has a random real spectrum.
      p1.a = p1.d = p2.a = p2.d = 0.0;
      cfg = s.config(n1, n2, p1, p2);
      g = inverse_direct(s.real_signal(n1, n2), *cfg);
    } else {
      // Chirped; g is a scaled delta, whose spectrum is real when c = e = 0.
      p1.c = p1.e = p2.c = p2.e = 0.0;
      cfg = s.config(n1, n2, p1, p2);
      g(0, 0) = Quaternion(s.uniform(0.5, 2));
    }
    const ConvReport report = conv_theorem_check(f, g, *cfg);
    if (report.regime != ConvRegime::verified) {
      return std::numeric_limits<double>::infinity();
    }
    return report.max_rel_deviation;
  });
}

void diagnostics(Suite& suite) {
  {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double stated = 0.0;
    suite.diagnostic("plancherel_unit_constant", [&](Sampler& s) {
      const std::size_t n1 = suite.size(s);
      const std::size_t n2 = suite.size(s);
      const TransformConfig cfg = s.config(n1, n2);
      const QSignal2D f = s.signal(n1, n2);
      const double ratio = energy(forward_direct(f, cfg)) / energy(f);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      accumulate(stated, std::abs(ratio - 1.0 / static_cast<double>(n1 * n2)));
      return std::abs(ratio - 1.0);
    });
    suite.diagnostic_value(
        "plancherel_inverse_size_constant", stated,
        "measured_ratio_min=" + format_e(lo) + " measured_ratio_max=" + format_e(hi));
  }
  suite.diagnostic("conjugate_decomposition_general", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    return rel(conjugate_transform_decomposition(f, cfg), forward_direct(conjugate(f), cfg));
  });
  suite.diagnostic("conjugate_decomposition_k_component", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = left_mul(Quaternion::k(), s.real_signal(n1, n2));
    return rel(conjugate_transform_decomposition(f, cfg), forward_direct(conjugate(f), cfg));
  });
  suite.diagnostic("modulation_reduced_frequency", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const std::size_t s1 = s.index(0, n1 - 1);
    const std::size_t s2 = s.index(0, n2 - 1);
    return rel(modulation_rhs_reduced(f, cfg, s1, s2),
               forward_direct(modulate(f, s1, s2), cfg));
  });
  suite.diagnostic("translation_circular_chirped", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    // Nonzero shifts where the axis allows one.
    const std::size_t k1 = n1 > 1 ? s.index(1, n1 - 1) : 0;
    const std::size_t k2 = n2 > 1 ? s.index(1, n2 - 1) : 0;
    return rel(translation_rhs(f, cfg, k1, k2),
               forward_direct(circular_shift(f, k1, k2), cfg));
  });
  suite.diagnostic("conv_theorem_general", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const TransformConfig cfg = s.config(n1, n2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D g = inverse_direct(s.real_signal(n1, n2), cfg);
    return conv_theorem_check(f, g, cfg).max_rel_deviation;
  });
  suite.diagnostic("conv_theorem_trivial_axis2_chirp", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s, 8);
    const std::size_t n2 = suite.size(s, 8);
    const ParamSet p1 = s.params();
    ParamSet p2;
    p2.b = s.sign() * s.uniform(0.1, 2);
    const TransformConfig cfg = s.config(n1, n2, p1, p2);
    const QSignal2D f = s.signal(n1, n2);
    const QSignal2D g = s.signal(n1, n2);
    return conv_theorem_check(f, g, cfg).max_rel_deviation;
  });
  suite.diagnostic("k_recombination", [&](Sampler& s) {
    const std::size_t n1 = suite.size(s);
    const std::size_t n2 = suite.size(s);
    const FastPlan plan(s.config(n1, n2));
    const QSignal2D f = s.signal(n1, n2);
    return rel(forward_k_recombination(f, plan), forward_direct(f, plan.config()));
  });
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.draws == 0) throw std::invalid_argument("draws must be positive");
  if (options.min_size == 0 || options.min_size > options.max_size) {
    throw std::invalid_argument("invalid size range");
  }
  Suite suite(options);
  quaternion_properties(suite);
  transform_properties(suite);
  fast_properties(suite);
  conv_properties(suite);
  diagnostics(suite);
  return suite.take();
}

void write_verify_report(std::ostream& os, const VerifyReport& report) {
  for (const auto& p : report.properties) {
    os << "PROPERTY " << p.name << ' ' << (p.passed ? "PASS" : "FAIL")
       << " max_dev=" << format_e(p.max_dev) << '\n';
  }
  for (const auto& d : report.diagnostics) {
    os << "DIAGNOSTIC " << d.name << " max_dev=" << format_e(d.max_dev);
    if (!d.detail.empty()) os << ' ' << d.detail;
    os << '\n';
  }
}

}  // namespace dqqpft
