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

// FFT-based two-sided transform.
//
//   1. psi = A1(x1) * f(x1, x2) * A2(x2)          time chirps
//   2. D   = two-sided quaternion DFT of psi       two complex 2D FFTs
//   3. F   = E1(w1) * D(w1, w2) * E2(w2) / sqrt(n1 n2)   frequency chirps
//
// For step 2 write psi = c1 + c2 j with c1, c2 i-complex (c1 is the first
// symplectic component and c2 the conjugate of the second, since
// x j = j conj(x)). With C = fft2(c) and C'(w1, w2) = C(w1, -w2 mod n2):
//
//   D = P + Q j,
//   P = (C1 + C1')/2 + i (C2 - C2')/2,
//   Q = (C2 + C2')/2 - i (C1 - C1')/2.

#ifndef DQQPFT_FAST_HPP_
#define DQQPFT_FAST_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dqqpft/fft.hpp"
#include "dqqpft/signal.hpp"
#include "dqqpft/transform.hpp"

namespace dqqpft {

// Chirp tables and FFT plans for one two-sided configuration. Immutable;
// safe to share between threads.
class FastPlan {
 public:
  // Throws std::invalid_argument for left- or right-sided configurations.
  explicit FastPlan(const TransformConfig& cfg);

  const TransformConfig& config() const { return cfg_; }
  const Fft2Plan& fft() const { return fft_; }

  // exp(-i(a1 x1^2 dt1^2 + d1 x1 dt1)), length n1.
  std::span<const ComplexI> time_chirp1() const { return time1_; }
  // exp(-j(a2 x2^2 dt2^2 + d2 x2 dt2)), length n2 (j-coefficient in imag).
  std::span<const ComplexI> time_chirp2() const { return time2_; }
  // exp(-i(c1 w1^2 du1^2 + e1 w1 du1)), length n1.
  std::span<const ComplexI> freq_chirp1() const { return freq1_; }
  // exp(-j(c2 w2^2 du2^2 + e2 w2 du2)), length n2.
  std::span<const ComplexI> freq_chirp2() const { return freq2_; }

 private:
  TransformConfig cfg_;
  Fft2Plan fft_;
  std::vector<ComplexI> time1_;
  std::vector<ComplexI> time2_;
  std::vector<ComplexI> freq1_;
  std::vector<ComplexI> freq2_;
};

// Step 1.
QSignal2D make_psi(const QSignal2D& f, const FastPlan& plan);

// Step 2: equals dqft2(psi) using two complex 2D FFTs.
QSignal2D dqft2_via_fft(const QSignal2D& psi, const Fft2Plan& fft);
QSignal2D dqft2_via_fft(const QSignal2D& psi);

// Steps 1-3. Matches forward_direct.
QSignal2D forward_fast(const QSignal2D& f, const FastPlan& plan);
QSignal2D forward_fast(const QSignal2D& f, const TransformConfig& cfg);

// Matches inverse_direct: conjugate frequency chirps, inverse-sign DFT (the
// forward DFT read at negated indices), conjugate time chirps.
QSignal2D inverse_fast(const QSignal2D& spectrum, const FastPlan& plan);
QSignal2D inverse_fast(const QSignal2D& spectrum, const TransformConfig& cfg);

// Complex spectra used by the (1 -+ k) recombination below:
// tilde = fft2(first symplectic component of psi) and
// hat_reversed = fft2(second component read at (-x1 mod n1, x2)).
struct SymplecticSpectra {
  CSignal2D tilde;
  CSignal2D hat_reversed;
};

SymplecticSpectra symplectic_spectra(const QSignal2D& psi, const Fft2Plan& fft);

// Diagnostic evaluation of
//   1/(2 sqrt(n1 n2)) E1 [(1 - k) Pc(w1, w2) + (1 + k) Pc(w1, -w2)] E2,
// with Pc = tilde + j * hat_reversed and -w2 taken mod n2. This is not the
// transform in general; it exists so the verification report can measure
// how far it lands from forward_direct.
Quaternion k_recombination(const CSignal2D& tilde,
                           const CSignal2D& hat_reversed, const FastPlan& plan,
                           std::size_t w1, std::size_t w2);

// k_recombination over the whole grid for the signal f.
QSignal2D forward_k_recombination(const QSignal2D& f, const FastPlan& plan);

}  // namespace dqqpft

#endif  // DQQPFT_FAST_HPP_
