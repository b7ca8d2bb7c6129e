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


// Direct versus fast timing table shared by `dqqpft bench` and the
// acceptance checks.

#ifndef DQQPFT_TOOLS_BENCH_HPP_
#define DQQPFT_TOOLS_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dqqpft::tools {

struct BenchRow {
  std::size_t n = 0;        // square grid side
  double direct_ms = 0.0;   // best of the timed runs
  double fast_ms = 0.0;
  double speedup = 0.0;     // direct_ms / fast_ms
  double max_rel_dev = 0.0; // fast against direct on the timed signal
};

// One row per side length. Each method runs until min_seconds of total time
// has accumulated (at least once); the best single run is reported.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::uint64_t seed = 42,
                                double min_seconds = 0.2);

void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace dqqpft::tools

#endif  // DQQPFT_TOOLS_BENCH_HPP_
