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

#include "dqqpft/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "text.hpp"

namespace dqqpft {
namespace {

struct CotCsc {
  double cot;
  double csc;
};

// Angles within a few ulps of an odd multiple of pi/2 give exact cot = 0 and
// csc = +-1; even multiples are degenerate.
CotCsc cot_csc(double theta) {
  if (!std::isfinite(theta)) {
    throw ParameterError("fractional angle must be finite");
  }
  const double quarter = std::numbers::pi / 2.0;
  const double turns = std::nearbyint(theta / quarter);
  const bool at_quadrant =
      std::abs(theta - turns * quarter) <= 1e-14 * std::max(1.0, std::abs(theta));
  if (at_quadrant) {
    const long long q = static_cast<long long>(turns);
    if (q % 2 == 0) {
      throw ParameterError("degenerate fractional angle: sin(theta) == 0");
    }
    // q = 1 mod 4 -> sin = +1, q = 3 mod 4 -> sin = -1.
    const long long r = ((q % 4) + 4) % 4;
    return {0.0, r == 1 ? 1.0 : -1.0};
  }
  const double s = std::sin(theta);
  if (s == 0.0) {
    throw ParameterError("degenerate fractional angle: sin(theta) == 0");
  }
  return {std::cos(theta) / s, 1.0 / s};
}

ParamSet fractional(double theta) {
  const auto [cot, csc] = cot_csc(theta);
  return {-cot / 2.0, csc, -cot / 2.0, 0.0, 0.0};
}

ParamSet canonical(double a, double b, double d) {
  if (b == 0.0 || !std::isfinite(b)) {
    throw ParameterError("linear canonical parameter b must be non-zero");
  }
  return {-a / (2.0 * b), 1.0 / b, -d / (2.0 * b), 0.0, 0.0};
}

std::vector<double> parse_numbers(std::string_view text, std::size_t expected,
                                  std::string_view what) {
  const auto parts = text::split(text, ',');
  if (parts.size() != expected) {
    throw ParameterError(std::string(what) + ": expected " +
                         std::to_string(expected) + " comma-separated values");
  }
  std::vector<double> out;
  for (const auto part : parts) {
    const auto v = text::parse_double(part);
    if (!v) {
      throw ParameterError(std::string(what) + ": cannot parse '" +
                           std::string(part) + "'");
    }
    out.push_back(*v);
  }
  return out;
}

ParamSet parse_param_set(std::string_view text) {
  const auto v = parse_numbers(text, 5, "parameter set");
  ParamSet p{v[0], v[1], v[2], v[3], v[4]};
  validate(p);
  return p;
}

}  // namespace

void validate(const ParamSet& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) ||
      !std::isfinite(p.d) || !std::isfinite(p.e)) {
    throw ParameterError("parameter set entries must be finite");
  }
  if (p.b == 0.0) {
    throw ParameterError("parameter b must be non-zero");
  }
}

double frequency_step(const ParamSet& p, std::size_t n, double dt) {
  return 2.0 * std::numbers::pi * p.b / (static_cast<double>(n) * dt);
}

Grid make_grid(std::size_t n1, std::size_t n2, double dt1, double dt2,
               const ParamSet& p1, const ParamSet& p2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("grid sizes must be at least 1");
  }
  if (!(dt1 > 0.0) || !(dt2 > 0.0) || !std::isfinite(dt1) ||
      !std::isfinite(dt2)) {
    throw std::invalid_argument("sampling steps must be positive and finite");
  }
  validate(p1);
  validate(p2);
  Grid g;
  g.n1_ = n1;
  g.n2_ = n2;
  g.dt1_ = dt1;
  g.dt2_ = dt2;
  g.du1_ = frequency_step(p1, n1, dt1);
  g.du2_ = frequency_step(p2, n2, dt2);
  return g;
}

ParamPair preset(const Preset& kind) {
  struct Visitor {
    ParamPair operator()(const presets::Qft&) const {
      return {ParamSet{}, ParamSet{}};
    }
    ParamPair operator()(const presets::Qfrft& p) const {
      return {fractional(p.theta1), fractional(p.theta2)};
    }
    ParamPair operator()(const presets::Qlct& p) const {
      return {canonical(p.a1, p.b1, p.d1), canonical(p.a2, p.b2, p.d2)};
    }
  };
  return std::visit(Visitor{}, kind);
}

ParamPair parse_param_pair(std::string_view text) {
  const auto halves = text::split(text, ':');
  if (halves.size() != 2) {
    throw ParameterError(
        "parameter pair must look like a1,b1,c1,d1,e1:a2,b2,c2,d2,e2");
  }
  return {parse_param_set(halves[0]), parse_param_set(halves[1])};
}

std::string format_param_pair(const ParamPair& pair) {
  auto one = [](const ParamSet& p) {
    return text::format_double(p.a) + "," + text::format_double(p.b) + "," +
           text::format_double(p.c) + "," + text::format_double(p.d) + "," +
           text::format_double(p.e);
  };
  return one(pair.p1) + ":" + one(pair.p2);
}

Preset parse_preset(std::string_view text) {
  text = text::trim(text);
  const auto colon = text.find(':');
  const auto name = text::trim(text.substr(0, colon));
  const auto args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "qft") {
    if (colon != std::string_view::npos) {
      throw ParameterError("preset qft takes no arguments");
    }
    return presets::Qft{};
  }
  if (name == "qfrft") {
    const auto v = parse_numbers(args, 2, "qfrft angles");
    return presets::Qfrft{v[0], v[1]};
  }
  if (name == "qlct") {
    const auto v = parse_numbers(args, 6, "qlct parameters");
    return presets::Qlct{v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  throw ParameterError("unknown preset '" + std::string(name) + "'");
}

}  // namespace dqqpft
