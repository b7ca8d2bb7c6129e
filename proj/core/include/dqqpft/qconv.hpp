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


// Quadratic-phase convolution of quaternion signals and the right-hand
// side of its transform factorization.
//
//   (f * g)(x) = sum_z exp(-2i a1 z1 (z1 - x1) dt1^2) f(z) g(x - z)
//                      exp(-2j a2 z2 (z2 - x2) dt2^2),
//
// with g indexed circularly, g((x - z) mod n).

#ifndef DQQPFT_QCONV_HPP_
#define DQQPFT_QCONV_HPP_

#include <iosfwd>
#include <string>

#include "dqqpft/signal.hpp"
#include "dqqpft/transform.hpp"

namespace dqqpft {

QSignal2D qp_convolve(const QSignal2D& f, const QSignal2D& g,
                      const TransformConfig& cfg);

// sqrt(n1 n2) Psi_i [Q[f0] Q[g] + i Q[f1] Q[g] + j Q[f2] Q[g] + k Q[f3] Q[g]]
// Psi_j, with Psi_i = exp(i(c1 w1^2 du1^2 + e1 w1 du1)), Psi_j the j
// analogue, Q = forward_direct and f0..f3 the real components of f.
QSignal2D conv_theorem_rhs(const QSignal2D& f, const QSignal2D& g,
                           const TransformConfig& cfg);

enum class ConvRegime {
  // f is i-complex, Q[g] is real, and either a = d = 0 on both axes or the
  // circular convolution does not wrap. The factorization holds exactly.
  verified,
  // Anything else; deviations are recorded, never asserted.
  diagnostic,
};

// The regime (f, g, cfg) falls into. Q[g] counts as real when its
// imaginary parts are below 1e-12 relative to max |Q[g]|.
ConvRegime classify_conv(const QSignal2D& f, const QSignal2D& g,
                         const TransformConfig& cfg);

struct ConvReport {
  QSignal2D lhs_spectrum;  // forward_direct(qp_convolve(f, g))
  QSignal2D rhs_spectrum;  // conv_theorem_rhs(f, g)
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
  ConvRegime regime = ConvRegime::diagnostic;

  // True unless the regime is verified and max_rel_deviation > tolerance.
  bool passed(double tolerance = 1e-10) const;
};

ConvReport conv_theorem_check(const QSignal2D& f, const QSignal2D& g,
                              const TransformConfig& cfg);

// Summary rows followed by one row per frequency sample; deviations in
// scientific notation.
void write_report(std::ostream& os, const ConvReport& report,
                  double tolerance = 1e-10);
std::string to_text(const ConvReport& report, double tolerance = 1e-10);

}  // namespace dqqpft

#endif  // DQQPFT_QCONV_HPP_
