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


#include "dqqpft/qconv.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dqqpft {
namespace {

// Largest index along each axis at which f has a nonzero sample; -1 when
// f is identically zero.
std::pair<long long, long long> support_extent(const QSignal2D& f) {
  long long m1 = -1;
  long long m2 = -1;
  for (std::size_t r = 0; r < f.n1(); ++r) {
    for (std::size_t c = 0; c < f.n2(); ++c) {
      if (f(r, c) != Quaternion()) {
        m1 = std::max(m1, static_cast<long long>(r));
        m2 = std::max(m2, static_cast<long long>(c));
      }
    }
  }
  return {m1, m2};
}

bool is_i_complex(const QSignal2D& f) {
  return std::all_of(f.data().begin(), f.data().end(), [](const Quaternion& q) {
    return q.y() == 0.0 && q.z() == 0.0;
  });
}

bool is_real(const QSignal2D& f, double rel_tol) {
  const double scale = max_abs(f);
  return std::all_of(f.data().begin(), f.data().end(), [&](const Quaternion& q) {
    const double im = std::sqrt(q.x() * q.x() + q.y() * q.y() + q.z() * q.z());
    return im <= rel_tol * scale;
  });
}

bool time_chirp_trivial(const ParamSet& p) { return p.a == 0.0 && p.d == 0.0; }

}  // namespace

QSignal2D qp_convolve(const QSignal2D& f, const QSignal2D& g,
                      const TransformConfig& cfg) {
  require_same_shape(f, g);
  const std::size_t n1 = cfg.n1();
  const std::size_t n2 = cfg.n2();
  if (f.n1() != n1 || f.n2() != n2) {
    throw DimensionError("convolution inputs do not match the configuration");
  }
  const double a1 = cfg.p1().a * cfg.grid().dt1() * cfg.grid().dt1();
  const double a2 = cfg.p2().a * cfg.grid().dt2() * cfg.grid().dt2();

  QSignal2D out(n1, n2);
  for (std::size_t x1 = 0; x1 < n1; ++x1) {
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      Quaternion acc;
      for (std::size_t z1 = 0; z1 < n1; ++z1) {
        const double s1 = static_cast<double>(z1);
        const double d1 = s1 - static_cast<double>(x1);
        const ComplexI left = std::polar(1.0, -2.0 * a1 * s1 * d1);
        const std::size_t r = (x1 + n1 - z1) % n1;
        for (std::size_t z2 = 0; z2 < n2; ++z2) {
          const double s2 = static_cast<double>(z2);
          const double d2 = s2 - static_cast<double>(x2);
          const ComplexI right = std::polar(1.0, -2.0 * a2 * s2 * d2);
          const std::size_t c = (x2 + n2 - z2) % n2;
          acc = acc + left_mul_i(left, right_mul_j(f(z1, z2) * g(r, c), right));
        }
      }
      out(x1, x2) = acc;
    }
  }
  return out;
}

QSignal2D conv_theorem_rhs(const QSignal2D& f, const QSignal2D& g,
                           const TransformConfig& cfg) {
  require_same_shape(f, g);
  const QSignal2D qg = forward_direct(g, cfg);
  const Quaternion units[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  QSignal2D bracket(f.n1(), f.n2());
  for (int n = 0; n < 4; ++n) {
    const QSignal2D qf = forward_direct(component(f, n), cfg);
    for (std::size_t s = 0; s < bracket.size(); ++s) {
      bracket.data()[s] = bracket.data()[s] + units[n] * qf.data()[s] * qg.data()[s];
    }
  }

  const auto& grid = cfg.grid();
  const double scale = std::sqrt(static_cast<double>(f.n1() * f.n2()));
  for (std::size_t w1 = 0; w1 < f.n1(); ++w1) {
    const ComplexI psi_i = std::polar(
        scale, frequency_chirp_phase(cfg.p1(), grid.du1(), static_cast<long long>(w1)));
    for (std::size_t w2 = 0; w2 < f.n2(); ++w2) {
      const ComplexI psi_j = std::polar(
          1.0, frequency_chirp_phase(cfg.p2(), grid.du2(), static_cast<long long>(w2)));
      bracket(w1, w2) = left_mul_i(psi_i, right_mul_j(bracket(w1, w2), psi_j));
    }
  }
  return bracket;
}

ConvRegime classify_conv(const QSignal2D& f, const QSignal2D& g,
                         const TransformConfig& cfg) {
  if (!is_i_complex(f) || !is_real(forward_direct(g, cfg), 1e-12)) {
    return ConvRegime::diagnostic;
  }
  if (time_chirp_trivial(cfg.p1()) && time_chirp_trivial(cfg.p2())) {
    return ConvRegime::verified;
  }
  const auto [f1, f2] = support_extent(f);
  const auto [g1, g2] = support_extent(g);
  const bool no_wrap = f1 + g1 < static_cast<long long>(f.n1()) &&
                       f2 + g2 < static_cast<long long>(f.n2());
  return no_wrap ? ConvRegime::verified : ConvRegime::diagnostic;
}

bool ConvReport::passed(double tolerance) const {
  return regime != ConvRegime::verified || max_rel_deviation <= tolerance;
}

ConvReport conv_theorem_check(const QSignal2D& f, const QSignal2D& g,
                              const TransformConfig& cfg) {
  ConvReport report;
  report.lhs_spectrum = forward_direct(qp_convolve(f, g, cfg), cfg);
  report.rhs_spectrum = conv_theorem_rhs(f, g, cfg);
  report.max_abs_deviation =
      max_abs_deviation(report.lhs_spectrum, report.rhs_spectrum);
  report.max_rel_deviation =
      max_rel_deviation(report.rhs_spectrum, report.lhs_spectrum);
  report.regime = classify_conv(f, g, cfg);
  return report;
}

void write_report(std::ostream& os, const ConvReport& report,
                  double tolerance) {
  const std::ios_base::fmtflags flags = os.flags();
  const std::streamsize precision = os.precision();
  const bool verified = report.regime == ConvRegime::verified;
  const char* status = !verified ? "RECORDED" : report.passed(tolerance) ? "PASS" : "FAIL";

  os << std::scientific << std::setprecision(6);
  os << "regime             " << (verified ? "verified" : "diagnostic") << '\n';
  os << "tolerance          " << tolerance << '\n';
  os << "max_abs_deviation  " << report.max_abs_deviation << '\n';
  os << "max_rel_deviation  " << report.max_rel_deviation << '\n';
  os << "status             " << status << '\n';
  os << "w1 w2 lhs_w lhs_x lhs_y lhs_z rhs_w rhs_x rhs_y rhs_z abs_dev\n";
  const QSignal2D& lhs = report.lhs_spectrum;
  const QSignal2D& rhs = report.rhs_spectrum;
  for (std::size_t w1 = 0; w1 < lhs.n1(); ++w1) {
    for (std::size_t w2 = 0; w2 < lhs.n2(); ++w2) {
      const Quaternion& l = lhs(w1, w2);
      const Quaternion& r = rhs(w1, w2);
      os << w1 << ' ' << w2;
      for (int n = 0; n < 4; ++n) os << ' ' << l.component(n);
      for (int n = 0; n < 4; ++n) os << ' ' << r.component(n);
      os << ' ' << norm(l - r) << '\n';
    }
  }
  os.flags(flags);
  os.precision(precision);
}

std::string to_text(const ConvReport& report, double tolerance) {
  std::ostringstream os;
  write_report(os, report, tolerance);
  return os.str();
}

}  // namespace dqqpft
