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


#include "dqqpft_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dqqpft/fast.hpp"
#include "dqqpft/io.hpp"
#include "dqqpft/params.hpp"
#include "dqqpft/qconv.hpp"
#include "dqqpft/transform.hpp"
#include "dqqpft/verify.hpp"
#include "dqqpft_tools/bench.hpp"

namespace dqqpft::tools {
namespace {

// Carries an exit code out of the subcommand handlers.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) {
  throw Failure{kExitUsage, message};
}

bool is_ppm(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".ppm";
}

struct ConfigArgs {
  std::string params;
  std::string preset;
  std::vector<double> dt;
  std::string side = "two";

  void add_to(CLI::App& cmd) {
    auto* p = cmd.add_option("--params", params,
                             "Parametric sets a1,b1,c1,d1,e1:a2,b2,c2,d2,e2");
    auto* q = cmd.add_option("--preset", preset,
                             "qft | qfrft:t1,t2 | qlct:a1,b1,d1,a2,b2,d2");
    p->excludes(q);
    cmd.add_option("--dt", dt, "Sampling steps dt1,dt2 (default: file header, else 1,1)")
        ->delimiter(',')
        ->expected(2);
  }

  // Flags win over the qcsv header; the header wins over the defaults.
  TransformConfig resolve(std::size_t n1, std::size_t n2,
                          const std::optional<TransformConfig>& header) const {
    ParamPair pair;
    try {
      if (!params.empty()) {
        pair = parse_param_pair(params);
      } else if (!preset.empty()) {
        pair = preset_pair();
      } else if (header) {
        pair = header->params();
      } else {
        pair = dqqpft::preset(presets::Qft{});
      }
    } catch (const ParameterError& e) {
      usage_error(e.what());
    }
    double dt1 = 1.0;
    double dt2 = 1.0;
    if (!dt.empty()) {
      dt1 = dt[0];
      dt2 = dt[1];
    } else if (header) {
      dt1 = header->grid().dt1();
      dt2 = header->grid().dt2();
    }
    Side s = Side::two_sided;
    if (side == "left") {
      s = Side::left_sided;
    } else if (side == "right") {
      s = Side::right_sided;
    } else if (side != "two") {
      usage_error("--side must be two, left or right");
    }
    try {
      return TransformConfig::make(n1, n2, pair, dt1, dt2, s);
    } catch (const std::invalid_argument& e) {
      usage_error(e.what());
    }
  }

 private:
  ParamPair preset_pair() const { return dqqpft::preset(parse_preset(preset)); }
};

struct Loaded {
  QSignal2D signal;
  std::optional<TransformConfig> header;
};

Loaded load(const std::string& path, ImageMapping mapping) {
  try {
    if (is_ppm(path)) return {read_image_ppm(path, mapping), std::nullopt};
    QcsvFile file = read_qcsv(path);
    return {std::move(file.signal), file.config};
  } catch (const std::exception& e) {
    throw Failure{kExitIo, path + ": " + e.what()};
  }
}

void store_qcsv(const std::string& path, const QSignal2D& signal,
                const TransformConfig& cfg) {
  try {
    write_qcsv(path, signal, cfg);
  } catch (const std::exception& e) {
    throw Failure{kExitIo, path + ": " + e.what()};
  }
}

ImageMapping mapping_of(const std::string& name) {
  try {
    return parse_mapping(name);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
}

struct TransformArgs {
  std::string in;
  std::string out;
  std::string method = "fast";
  std::string mapping = "pure";
  ConfigArgs config;
};

void add_transform_options(CLI::App& cmd, TransformArgs& a) {
  cmd.add_option("--in", a.in, "Input signal (.qcsv or .ppm)")->required();
  cmd.add_option("--out", a.out, "Output file (.qcsv; .ppm for inverse only)")->required();
  cmd.add_option("--method", a.method, "direct | fast")
      ->check(CLI::IsMember({"direct", "fast"}));
  cmd.add_option("--mapping", a.mapping, "Image mapping: pure | luminance")
      ->check(CLI::IsMember({"pure", "luminance"}));
  cmd.add_option("--side", a.config.side, "two | left | right (direct method only)")
      ->check(CLI::IsMember({"two", "left", "right"}));
  a.config.add_to(cmd);
}

int run_transform(bool inverse, const TransformArgs& a, std::ostream& out) {
  const ImageMapping mapping = mapping_of(a.mapping);
  if (!inverse && is_ppm(a.out)) {
    usage_error("spectra are written as qcsv; use a .qcsv output");
  }
  const Loaded input = load(a.in, mapping);
  const TransformConfig cfg =
      a.config.resolve(input.signal.n1(), input.signal.n2(), input.header);
  const bool fast = a.method == "fast";
  if (fast && cfg.side() != Side::two_sided) {
    usage_error("--method fast supports two-sided transforms only");
  }

  QSignal2D result;
  if (inverse) {
    result = fast ? inverse_fast(input.signal, cfg) : inverse_direct(input.signal, cfg);
  } else {
    result = fast ? forward_fast(input.signal, cfg) : forward_direct(input.signal, cfg);
  }

  if (is_ppm(a.out)) {
    try {
      write_image_ppm(a.out, result, mapping);
    } catch (const std::exception& e) {
      throw Failure{kExitIo, a.out + ": " + e.what()};
    }
  } else {
    store_qcsv(a.out, result, cfg);
  }
  out << (inverse ? "inverse " : "forward ") << result.n1() << 'x' << result.n2()
      << " method=" << a.method << " params=" << format_param_pair(cfg.params())
      << " -> " << a.out << '\n';
  return kExitOk;
}

struct ConvArgs {
  std::string in;
  std::string in2;
  std::string out;
  std::string mapping = "pure";
  bool check = false;
  ConfigArgs config;
};

int run_conv(const ConvArgs& a, std::ostream& out) {
  const ImageMapping mapping = mapping_of(a.mapping);
  if (is_ppm(a.out)) usage_error("convolution output is written as qcsv");
  const Loaded f = load(a.in, mapping);
  const Loaded g = load(a.in2, mapping);
  if (!f.signal.same_shape(g.signal)) {
    throw Failure{kExitIo, "inputs have different shapes"};
  }
  const TransformConfig cfg = a.config.resolve(f.signal.n1(), f.signal.n2(), f.header);
  const QSignal2D conv = qp_convolve(f.signal, g.signal, cfg);
  store_qcsv(a.out, conv, cfg);
  if (!a.check) return kExitOk;
  const ConvReport report = conv_theorem_check(f.signal, g.signal, cfg);
  write_report(out, report);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sided discrete quaternion quadratic-phase Fourier transform"};
  app.name("dqqpft");
  app.require_subcommand(1);

  TransformArgs fwd;
  auto* forward_cmd = app.add_subcommand("forward", "Forward transform");
  add_transform_options(*forward_cmd, fwd);

  TransformArgs inv;
  auto* inverse_cmd = app.add_subcommand("inverse", "Inverse transform");
  add_transform_options(*inverse_cmd, inv);

  ConvArgs conv;
  auto* conv_cmd = app.add_subcommand("conv", "Quadratic-phase convolution");
  conv_cmd->add_option("--in", conv.in, "First signal f")->required();
  conv_cmd->add_option("--in2", conv.in2, "Second signal g")->required();
  conv_cmd->add_option("--out", conv.out, "Output qcsv")->required();
  conv_cmd->add_option("--mapping", conv.mapping, "Image mapping: pure | luminance")
      ->check(CLI::IsMember({"pure", "luminance"}));
  conv_cmd->add_flag("--check", conv.check, "Print the convolution-theorem report");
  conv.config.add_to(*conv_cmd);

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized property suite");
  verify_cmd->add_option("--seed", vopt.seed, "Random seed");
  verify_cmd->add_option("--draws", vopt.draws, "Draws per property")
      ->check(CLI::PositiveNumber);

  std::vector<std::size_t> sizes{16, 32, 64};
  std::uint64_t bench_seed = 42;
  double min_time = 0.2;
  auto* bench_cmd = app.add_subcommand("bench", "Time direct against fast");
  bench_cmd->add_option("--sizes", sizes, "Square side lengths")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_option("--min-time", min_time, "Seconds of runs per method and size")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*forward_cmd) return run_transform(false, fwd, out);
    if (*inverse_cmd) return run_transform(true, inv, out);
    if (*conv_cmd) return run_conv(conv, out);
    if (*verify_cmd) {
      const VerifyReport report = run_verify(vopt);
      write_verify_report(out, report);
      return report.all_passed() ? kExitOk : kExitVerificationFailed;
    }
    if (*bench_cmd) {
      write_bench_table(out, run_bench(sizes, bench_seed, min_time));
      return kExitOk;
    }
  } catch (const Failure& f) {
    err << "dqqpft: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace dqqpft::tools
