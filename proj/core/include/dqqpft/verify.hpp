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


// Randomized property suite behind `dqqpft verify`.
//
// Every asserted property is checked on seeded random draws and reported as
//
//   PROPERTY <name> PASS|FAIL max_dev=<e>
//
// Identities that only hold in restricted regimes are evaluated outside
// them as well and reported, never asserted, as
//
//   DIAGNOSTIC <name> max_dev=<e> [key=value ...]
//
// Output depends only on the options, so a fixed seed gives identical text.

#ifndef DQQPFT_VERIFY_HPP_
#define DQQPFT_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dqqpft {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t draws = 200;
  std::size_t min_size = 2;
  std::size_t max_size = 16;
};

struct PropertyResult {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct DiagnosticResult {
  std::string name;
  double max_dev = 0.0;
  std::string detail;  // space-separated key=value pairs, may be empty
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  std::vector<DiagnosticResult> diagnostics;

  bool all_passed() const;
};

// Throws std::invalid_argument for draws == 0 or an empty size range.
VerifyReport run_verify(const VerifyOptions& options);

void write_verify_report(std::ostream& os, const VerifyReport& report);

}  // namespace dqqpft

#endif  // DQQPFT_VERIFY_HPP_
