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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <variant>

#include "dqqpft/params.hpp"

namespace {

using dqqpft::ParamPair;
using dqqpft::ParameterError;
using dqqpft::ParamSet;
namespace presets = dqqpft::presets;

constexpr double kPi = std::numbers::pi;
const ParamSet kQft{0, 1, 0, 0, 0};

TEST(Grid, FrequencyStepFromB) {
  const auto g = dqqpft::make_grid(4, 4, 0.5, 0.5, kQft, kQft);
  EXPECT_DOUBLE_EQ(g.du1(), kPi);
  EXPECT_DOUBLE_EQ(g.du2(), kPi);
  const auto one = dqqpft::make_grid(1, 1, 1.0, 1.0, kQft, kQft);
  EXPECT_DOUBLE_EQ(one.du1(), 2 * kPi);
}

TEST(Grid, StoresInputs) {
  const ParamSet p1{0.5, -2, 0, 0, 0};
  const ParamSet p2{0, 0.25, 0, 0, 0};
  const auto g = dqqpft::make_grid(3, 5, 0.2, 1.5, p1, p2);
  EXPECT_EQ(g.n1(), 3u);
  EXPECT_EQ(g.n2(), 5u);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.dt1(), 0.2);
  EXPECT_EQ(g.dt2(), 1.5);
  EXPECT_DOUBLE_EQ(g.du1(), 2 * kPi * -2 / (3 * 0.2));
  EXPECT_DOUBLE_EQ(g.du2(), 2 * kPi * 0.25 / (5 * 1.5));
  EXPECT_EQ(g.du1(), dqqpft::frequency_step(p1, 3, 0.2));
}

TEST(Grid, Deterministic) {
  const ParamSet p{0.1, 0.7, 0.3, -0.2, 1.1};
  EXPECT_EQ(dqqpft::make_grid(7, 9, 0.3, 0.9, p, p),
            dqqpft::make_grid(7, 9, 0.3, 0.9, p, p));
}

TEST(Grid, RejectsBadInputs) {
  EXPECT_THROW(dqqpft::make_grid(0, 4, 1, 1, kQft, kQft), std::invalid_argument);
  EXPECT_THROW(dqqpft::make_grid(4, 0, 1, 1, kQft, kQft), std::invalid_argument);
  EXPECT_THROW(dqqpft::make_grid(4, 4, 0, 1, kQft, kQft), std::invalid_argument);
  EXPECT_THROW(dqqpft::make_grid(4, 4, 1, -1, kQft, kQft), std::invalid_argument);
  EXPECT_THROW(dqqpft::make_grid(4, 4, 1, NAN, kQft, kQft), std::invalid_argument);
  const ParamSet zero_b{0, 0, 0, 0, 0};
  EXPECT_THROW(dqqpft::make_grid(4, 4, 1, 1, zero_b, kQft), ParameterError);
  EXPECT_THROW(dqqpft::make_grid(4, 4, 1, 1, kQft, zero_b), ParameterError);
}

TEST(Validate, RejectsNonFinite) {
  EXPECT_NO_THROW(dqqpft::validate(kQft));
  EXPECT_THROW(dqqpft::validate({INFINITY, 1, 0, 0, 0}), ParameterError);
  EXPECT_THROW(dqqpft::validate({0, 1, NAN, 0, 0}), ParameterError);
  EXPECT_THROW(dqqpft::validate({0, 0, 0, 0, 0}), ParameterError);
}

TEST(Preset, Qft) {
  EXPECT_EQ(dqqpft::preset(presets::Qft{}), (ParamPair{kQft, kQft}));
}

TEST(Preset, QfrftQuarterTurnIsQft) {
  EXPECT_EQ(dqqpft::preset(presets::Qfrft{kPi / 2, kPi / 2}), (ParamPair{kQft, kQft}));
  const ParamPair neg = dqqpft::preset(presets::Qfrft{-kPi / 2, 3 * kPi / 2});
  EXPECT_EQ(neg.p1, (ParamSet{0, -1, 0, 0, 0}));
  EXPECT_EQ(neg.p2, (ParamSet{0, -1, 0, 0, 0}));
}

TEST(Preset, QfrftGeneralAngle) {
  const double t1 = 0.7;
  const double t2 = -2.1;
  const ParamPair p = dqqpft::preset(presets::Qfrft{t1, t2});
  EXPECT_DOUBLE_EQ(p.p1.a, -0.5 * std::cos(t1) / std::sin(t1));
  EXPECT_DOUBLE_EQ(p.p1.b, 1 / std::sin(t1));
  EXPECT_DOUBLE_EQ(p.p1.c, p.p1.a);
  EXPECT_EQ(p.p1.d, 0.0);
  EXPECT_EQ(p.p1.e, 0.0);
  EXPECT_DOUBLE_EQ(p.p2.b, 1 / std::sin(t2));
}

TEST(Preset, QfrftDegenerateAngle) {
  EXPECT_THROW(dqqpft::preset(presets::Qfrft{0.0, 1.0}), ParameterError);
  EXPECT_THROW(dqqpft::preset(presets::Qfrft{1.0, kPi}), ParameterError);
  EXPECT_THROW(dqqpft::preset(presets::Qfrft{-2 * kPi, 1.0}), ParameterError);
}

TEST(Preset, Qlct) {
  const ParamPair p = dqqpft::preset(presets::Qlct{1.0, 2.0, 3.0, -1.0, 0.5, 2.0});
  EXPECT_EQ(p.p1, (ParamSet{-0.25, 0.5, -0.75, 0, 0}));
  EXPECT_EQ(p.p2, (ParamSet{1.0, 2.0, -2.0, 0, 0}));
  EXPECT_THROW(dqqpft::preset(presets::Qlct{1, 0, 1, 1, 1, 1}), ParameterError);
  EXPECT_THROW(dqqpft::preset(presets::Qlct{1, 1, 1, 1, 0, 1}), ParameterError);
}

TEST(ParamText, ParseAndFormat) {
  const ParamPair p = dqqpft::parse_param_pair("0.5,1,-2,2,0:0,-1,1,3,0");
  EXPECT_EQ(p.p1, (ParamSet{0.5, 1, -2, 2, 0}));
  EXPECT_EQ(p.p2, (ParamSet{0, -1, 1, 3, 0}));
  EXPECT_EQ(dqqpft::format_param_pair(p), "0.5,1,-2,2,0:0,-1,1,3,0");

  const ParamPair q{{0.1, 1.0 / 3.0, -1e-300, 2.5e10, 7}, {1, 2, 3, 4, 5}};
  EXPECT_EQ(dqqpft::parse_param_pair(dqqpft::format_param_pair(q)), q);
  EXPECT_EQ(dqqpft::parse_param_pair(" 0 , 1 ,0,0,0 : 0,1,0,0,+0"), (ParamPair{kQft, kQft}));
}

TEST(ParamText, ParseErrors) {
  EXPECT_THROW(dqqpft::parse_param_pair(""), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0,0"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0:0,1,0,0,0"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0,x:0,1,0,0,0"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,0,0,0,0:0,1,0,0,0"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0,0:0,1,0,0,0:0,1,0,0,0"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0,0:0,1,0,0,1.5.2"), ParameterError);
  EXPECT_THROW(dqqpft::parse_param_pair("0,1,0,0,0:0,1,0,0,inf"), ParameterError);
}

TEST(PresetText, Parse) {
  EXPECT_TRUE(std::holds_alternative<presets::Qft>(dqqpft::parse_preset("qft")));
  const auto fr = dqqpft::parse_preset("qfrft:1.5,0.25");
  ASSERT_TRUE(std::holds_alternative<presets::Qfrft>(fr));
  EXPECT_EQ(std::get<presets::Qfrft>(fr).theta1, 1.5);
  EXPECT_EQ(std::get<presets::Qfrft>(fr).theta2, 0.25);
  const auto lc = dqqpft::parse_preset("qlct:1,2,3,4,5,6");
  ASSERT_TRUE(std::holds_alternative<presets::Qlct>(lc));
  EXPECT_EQ(std::get<presets::Qlct>(lc).a1, 1);
  EXPECT_EQ(std::get<presets::Qlct>(lc).d2, 6);
  EXPECT_THROW(dqqpft::parse_preset("dft"), ParameterError);
  EXPECT_THROW(dqqpft::parse_preset("qft:1"), ParameterError);
  EXPECT_THROW(dqqpft::parse_preset("qfrft:1"), ParameterError);
  EXPECT_THROW(dqqpft::parse_preset("qlct:1,2,3"), ParameterError);
}

}  // namespace
