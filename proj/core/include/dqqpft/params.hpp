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

#ifndef DQQPFT_PARAMS_HPP_
#define DQQPFT_PARAMS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dqqpft {

// Raised for an invalid parametric set (b == 0, non-finite entries) or a
// preset that has no parametric form (sin(theta) == 0).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quadratic-phase parameters for one axis. The kernel phase is
//   a*t^2 + b*t*u + c*u^2 + d*t + e*u,
// with t = xi*dt and u = omega*du. In the discrete kernel b only enters
// through du = 2*pi*b / (n*dt).
struct ParamSet {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

struct ParamPair {
  ParamSet p1;
  ParamSet p2;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

// Throws ParameterError unless every entry is finite and b != 0.
void validate(const ParamSet& p);

// Sample counts, time steps and the derived frequency steps of a 2D grid.
// Only make_grid() constructs one, so du always satisfies
// du_s = 2*pi*b_s / (n_s * dt_s).
class Grid {
 public:
  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t size() const { return n1_ * n2_; }
  double dt1() const { return dt1_; }
  double dt2() const { return dt2_; }
  double du1() const { return du1_; }
  double du2() const { return du2_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  friend Grid make_grid(std::size_t, std::size_t, double, double,
                        const ParamSet&, const ParamSet&);
  Grid() = default;

  std::size_t n1_ = 1;
  std::size_t n2_ = 1;
  double dt1_ = 1.0;
  double dt2_ = 1.0;
  double du1_ = 0.0;
  double du2_ = 0.0;
};

// Throws std::invalid_argument for zero sizes or non-positive steps and
// ParameterError for b == 0.
Grid make_grid(std::size_t n1, std::size_t n2, double dt1, double dt2,
               const ParamSet& p1, const ParamSet& p2);

// du = 2*pi*b / (n*dt) for a single axis.
double frequency_step(const ParamSet& p, std::size_t n, double dt);

namespace presets {

struct Qft {};

// Fractional Fourier angles in radians.
struct Qfrft {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

// Linear canonical (a, b, d) per axis.
struct Qlct {
  double a1 = 0.0, b1 = 1.0, d1 = 0.0;
  double a2 = 0.0, b2 = 1.0, d2 = 0.0;
};

}  // namespace presets

using Preset = std::variant<presets::Qft, presets::Qfrft, presets::Qlct>;

// Parametric sets that reduce the transform to the named special case:
//   qft   -> (0, 1, 0, 0, 0)
//   qfrft -> (-cot(t)/2, csc(t), -cot(t)/2, 0, 0)
//   qlct  -> (-a/(2b), 1/b, -d/(2b), 0, 0)
ParamPair preset(const Preset& kind);

// "a1,b1,c1,d1,e1:a2,b2,c2,d2,e2". Validates both sets.
ParamPair parse_param_pair(std::string_view text);
std::string format_param_pair(const ParamPair& pair);

// "qft", "qfrft:t1,t2" or "qlct:a1,b1,d1,a2,b2,d2".
Preset parse_preset(std::string_view text);

}  // namespace dqqpft

#endif  // DQQPFT_PARAMS_HPP_
