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


#include "dqqpft_tools/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "dqqpft/fast.hpp"
#include "dqqpft/transform.hpp"

namespace dqqpft::tools {
namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit(rng);
}

ParamSet random_params(std::mt19937_64& rng) {
  const double sign = (rng() & 1) ? 1.0 : -1.0;
  return {uniform(rng, -2, 2), sign * uniform(rng, 0.1, 2), uniform(rng, -2, 2),
          uniform(rng, -2, 2), uniform(rng, -2, 2)};
}

template <typename Fn>
double best_ms(Fn&& fn, double min_seconds) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  double total = 0.0;
  do {
    const auto start = clock::now();
    fn();
    const double s = std::chrono::duration<double>(clock::now() - start).count();
    best = std::min(best, s);
    total += s;
  } while (total < min_seconds);
  return best * 1e3;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::uint64_t seed, double min_seconds) {
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (const std::size_t n : sizes) {
    const ParamSet p1 = random_params(rng);
    const ParamSet p2 = random_params(rng);
    const TransformConfig cfg = TransformConfig::make(n, n, 1.0, 1.0, p1, p2);
    QSignal2D f(n, n);
    for (auto& q : f.data()) {
      q = Quaternion(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                     uniform(rng, -1, 1));
    }

    QSignal2D direct;
    QSignal2D fast;
    BenchRow row;
    row.n = n;
    row.direct_ms = best_ms([&] { direct = forward_direct(f, cfg); }, min_seconds);
    // Plan construction is part of the fast timing.
    row.fast_ms = best_ms([&] { fast = forward_fast(f, FastPlan(cfg)); }, min_seconds);
    row.speedup = row.direct_ms / row.fast_ms;
    row.max_rel_dev = max_rel_deviation(fast, direct);
    rows.push_back(row);
  }
  return rows;
}

void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows) {
  const std::ios_base::fmtflags flags = os.flags();
  const std::streamsize precision = os.precision();
  os << std::left << std::setw(8) << "size" << std::right << std::setw(14)
     << "direct_ms" << std::setw(14) << "fast_ms" << std::setw(12) << "speedup"
     << std::setw(16) << "max_rel_dev" << '\n';
  for (const auto& r : rows) {
    const std::string size = std::to_string(r.n) + "x" + std::to_string(r.n);
    os << std::left << std::setw(8) << size << std::right << std::fixed
       << std::setprecision(3) << std::setw(14) << r.direct_ms << std::setw(14)
       << r.fast_ms << std::setprecision(1) << std::setw(12) << r.speedup
       << std::scientific << std::setprecision(3) << std::setw(16) << r.max_rel_dev
       << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace dqqpft::tools
