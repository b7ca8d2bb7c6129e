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


#include <benchmark/benchmark.h>

#include <random>

#include "dqqpft/fast.hpp"
#include "dqqpft/fft.hpp"
#include "dqqpft/transform.hpp"

namespace {

dqqpft::TransformConfig config(std::size_t n) {
  return dqqpft::TransformConfig::make(n, n, 0.7, 1.3, {0.4, 1.1, -0.8, 0.3, 1.5},
                                       {-1.2, -0.6, 0.9, -1.7, 0.2});
}

dqqpft::QSignal2D signal(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  dqqpft::QSignal2D f(n, n);
  for (auto& q : f.data()) q = dqqpft::Quaternion(u(rng), u(rng), u(rng), u(rng));
  return f;
}

void BM_ForwardDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto cfg = config(n);
  const auto f = signal(n);
  for (auto _ : state) benchmark::DoNotOptimize(dqqpft::forward_direct(f, cfg));
}

void BM_ForwardFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dqqpft::FastPlan plan(config(n));
  const auto f = signal(n);
  for (auto _ : state) benchmark::DoNotOptimize(dqqpft::forward_fast(f, plan));
}

void BM_FastPlan(benchmark::State& state) {
  const auto cfg = config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dqqpft::FastPlan(cfg));
}

void BM_Fft2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dqqpft::Fft2Plan plan(n, n);
  dqqpft::CSignal2D x(n, n);
  for (auto& v : x.data()) v = 1.0;
  for (auto _ : state) {
    plan.transform(x, dqqpft::Direction::forward);
    benchmark::ClobberMemory();
  }
}

BENCHMARK(BM_ForwardDirect)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ForwardFast)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(100)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FastPlan)->Arg(64)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Fft2)->Arg(64)->Arg(100)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
