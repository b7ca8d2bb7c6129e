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


#include "dqqpft/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "text.hpp"

namespace dqqpft {
namespace {

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // False at end of input.
  bool next(std::string& out) {
    if (!std::getline(in_, out)) return false;
    ++line_;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::string require_line(LineReader& reader, const char* what) {
  std::string line;
  if (!reader.next(line)) {
    throw MalformedHeader(reader.line() + 1,
                          at_line(reader.line() + 1, std::string("missing ") + what));
  }
  return line;
}

// Splits "<tag>,rest" and checks the tag.
std::string_view tagged(std::string_view line, std::string_view tag,
                        std::size_t lineno) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos || text::trim(line.substr(0, comma)) != tag) {
    throw MalformedHeader(lineno, at_line(lineno, "expected '" + std::string(tag) +
                                                      ",...' header line"));
  }
  return line.substr(comma + 1);
}

double header_double(std::string_view token, std::size_t lineno) {
  const auto v = text::parse_double(token);
  if (!v) {
    throw MalformedHeader(lineno, at_line(lineno, "cannot parse '" +
                                                      std::string(token) + "'"));
  }
  if (!std::isfinite(*v)) {
    throw NonFiniteValue(lineno, at_line(lineno, "non-finite header value"));
  }
  return *v;
}

ParamSet header_params(std::string_view group, std::size_t lineno) {
  const auto tokens = text::split(group, ',');
  if (tokens.size() != 5) {
    throw MalformedHeader(lineno,
                          at_line(lineno, "a parametric set needs 5 entries"));
  }
  return {header_double(tokens[0], lineno), header_double(tokens[1], lineno),
          header_double(tokens[2], lineno), header_double(tokens[3], lineno),
          header_double(tokens[4], lineno)};
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

// PPM header token, skipping whitespace and '#' comments.
std::string ppm_token(std::istream& in) {
  std::string token;
  int ch = 0;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(ch));
  }
  if (token.empty()) throw ImageError("truncated PPM header");
  return token;
}

unsigned long long ppm_number(std::istream& in, const char* what) {
  const std::string token = ppm_token(in);
  const auto v = text::parse_unsigned(token);
  if (!v) throw ImageError(std::string("bad PPM ") + what + " '" + token + "'");
  return *v;
}

Quaternion pixel_to_sample(double r, double g, double b, ImageMapping mapping) {
  if (mapping == ImageMapping::pure) return {0.0, r, g, b};
  return Quaternion((299.0 * r + 587.0 * g + 114.0 * b) / 1000.0);
}

unsigned char to_channel(double v) {
  if (!(v > 0.0)) return 0;  // also maps NaN to 0
  return static_cast<unsigned char>(std::min(255.0, std::round(v)));
}

}  // namespace

QcsvError::QcsvError(std::size_t line, const std::string& what)
    : std::runtime_error(what), line_(line) {}

QcsvFile read_qcsv(std::istream& in) {
  LineReader reader(in);

  if (text::trim(require_line(reader, "magic line")) != "qcsv,1") {
    throw MalformedHeader(reader.line(),
                          at_line(reader.line(), "expected 'qcsv,1'"));
  }

  const std::string size_line = require_line(reader, "size line");
  const auto sizes = text::split(tagged(size_line, "size", reader.line()), ',');
  if (sizes.size() != 2) {
    throw MalformedHeader(reader.line(), at_line(reader.line(), "expected size,n1,n2"));
  }
  const auto n1 = text::parse_unsigned(sizes[0]);
  const auto n2 = text::parse_unsigned(sizes[1]);
  if (!n1 || !n2 || *n1 == 0 || *n2 == 0) {
    throw MalformedHeader(reader.line(),
                          at_line(reader.line(), "sizes must be positive integers"));
  }

  const std::string dt_line = require_line(reader, "dt line");
  const auto dts = text::split(tagged(dt_line, "dt", reader.line()), ',');
  if (dts.size() != 2) {
    throw MalformedHeader(reader.line(), at_line(reader.line(), "expected dt,dt1,dt2"));
  }
  const double dt1 = header_double(dts[0], reader.line());
  const double dt2 = header_double(dts[1], reader.line());
  if (dt1 <= 0.0 || dt2 <= 0.0) {
    throw MalformedHeader(reader.line(),
                          at_line(reader.line(), "sampling steps must be positive"));
  }

  const std::string params_line = require_line(reader, "params line");
  const auto groups = text::split(tagged(params_line, "params", reader.line()), ':');
  if (groups.size() != 2) {
    throw MalformedHeader(reader.line(),
                          at_line(reader.line(), "expected two ':'-separated sets"));
  }
  const ParamSet p1 = header_params(groups[0], reader.line());
  const ParamSet p2 = header_params(groups[1], reader.line());
  try {
    validate(p1);
    validate(p2);
  } catch (const ParameterError& err) {
    throw ParameterError(at_line(reader.line(), err.what()));
  }

  const std::size_t count = *n1 * *n2;
  std::vector<Quaternion> data;
  data.reserve(count);
  std::string line;
  for (std::size_t s = 0; s < count; ++s) {
    if (!reader.next(line)) {
      throw DimensionMismatch(
          reader.line() + 1,
          at_line(reader.line() + 1, "missing sample " + std::to_string(s + 1) +
                                         " of " + std::to_string(count)));
    }
    const auto tokens = text::split(line, ',');
    if (tokens.size() != 4) {
      throw DimensionMismatch(reader.line(),
                              at_line(reader.line(), "expected 4 components, got " +
                                                         std::to_string(tokens.size())));
    }
    double c[4];
    for (int n = 0; n < 4; ++n) {
      const auto v = text::parse_double(tokens[n]);
      if (!v) {
        throw MalformedRow(reader.line(),
                           at_line(reader.line(), "cannot parse '" +
                                                      std::string(tokens[n]) + "'"));
      }
      if (!std::isfinite(*v)) {
        throw NonFiniteValue(reader.line(), at_line(reader.line(), "non-finite sample"));
      }
      c[n] = *v;
    }
    data.emplace_back(c[0], c[1], c[2], c[3]);
  }
  while (reader.next(line)) {
    if (!text::trim(line).empty()) {
      throw DimensionMismatch(reader.line(),
                              at_line(reader.line(), "more samples than the header declares"));
    }
  }

  return {QSignal2D(*n1, *n2, std::move(data)),
          TransformConfig::make(*n1, *n2, dt1, dt2, p1, p2)};
}

QcsvFile read_qcsv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return read_qcsv(in);
}

void write_qcsv(std::ostream& out, const QSignal2D& signal,
                const TransformConfig& cfg) {
  if (signal.n1() != cfg.n1() || signal.n2() != cfg.n2()) {
    throw DimensionError("signal shape does not match the configuration");
  }
  const auto& g = cfg.grid();
  out << "qcsv,1\n";
  out << "size," << signal.n1() << ',' << signal.n2() << '\n';
  out << "dt," << text::format_double(g.dt1()) << ',' << text::format_double(g.dt2())
      << '\n';
  out << "params," << format_param_pair(cfg.params()) << '\n';
  for (const Quaternion& q : signal.data()) {
    out << text::format_double(q.w()) << ',' << text::format_double(q.x()) << ','
        << text::format_double(q.y()) << ',' << text::format_double(q.z()) << '\n';
  }
}

void write_qcsv(const std::filesystem::path& path, const QSignal2D& signal,
                const TransformConfig& cfg) {
  std::ofstream out = open_out(path);
  write_qcsv(out, signal, cfg);
  finish_write(out, path);
}

ImageMapping parse_mapping(const std::string& text) {
  if (text == "pure") return ImageMapping::pure;
  if (text == "luminance") return ImageMapping::luminance;
  throw std::invalid_argument("unknown image mapping '" + text + "'");
}

QSignal2D read_image_ppm(std::istream& in, ImageMapping mapping) {
  const std::string magic = ppm_token(in);
  if (magic != "P3" && magic != "P6") {
    throw ImageError("unsupported PPM magic '" + magic + "'");
  }
  const auto width = ppm_number(in, "width");
  const auto height = ppm_number(in, "height");
  const auto maxval = ppm_number(in, "maxval");
  if (width == 0 || height == 0) throw ImageError("PPM dimensions must be positive");
  if (maxval == 0 || maxval > 255) {
    throw ImageError("unsupported PPM maxval " + std::to_string(maxval) +
                     " (only 8-bit images)");
  }

  QSignal2D out(height, width);
  if (magic == "P6") {
    // ppm_token consumed exactly one whitespace byte after maxval.
    std::vector<unsigned char> raw(3 * width * height);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
      throw ImageError("truncated PPM pixel data");
    }
    for (std::size_t s = 0; s < out.size(); ++s) {
      out.data()[s] = pixel_to_sample(raw[3 * s], raw[3 * s + 1], raw[3 * s + 2], mapping);
    }
  } else {
    for (std::size_t s = 0; s < out.size(); ++s) {
      double rgb[3];
      for (double& v : rgb) {
        const auto value = ppm_number(in, "sample");
        if (value > maxval) throw ImageError("PPM sample exceeds maxval");
        v = static_cast<double>(value);
      }
      out.data()[s] = pixel_to_sample(rgb[0], rgb[1], rgb[2], mapping);
    }
  }
  return out;
}

QSignal2D read_image_ppm(const std::filesystem::path& path, ImageMapping mapping) {
  std::ifstream in = open_in(path);
  return read_image_ppm(in, mapping);
}

void write_image_ppm(std::ostream& out, const QSignal2D& signal,
                     ImageMapping mapping, PpmEncoding encoding) {
  const bool binary = encoding == PpmEncoding::binary;
  out << (binary ? "P6" : "P3") << '\n'
      << signal.n2() << ' ' << signal.n1() << '\n'
      << "255\n";
  for (std::size_t r = 0; r < signal.n1(); ++r) {
    for (std::size_t c = 0; c < signal.n2(); ++c) {
      const Quaternion& q = signal(r, c);
      unsigned char rgb[3];
      if (mapping == ImageMapping::pure) {
        rgb[0] = to_channel(q.x());
        rgb[1] = to_channel(q.y());
        rgb[2] = to_channel(q.z());
      } else {
        rgb[0] = rgb[1] = rgb[2] = to_channel(q.w());
      }
      if (binary) {
        out.write(reinterpret_cast<const char*>(rgb), 3);
      } else {
        out << int{rgb[0]} << ' ' << int{rgb[1]} << ' ' << int{rgb[2]}
            << (c + 1 == signal.n2() ? '\n' : ' ');
      }
    }
  }
}

void write_image_ppm(const std::filesystem::path& path, const QSignal2D& signal,
                     ImageMapping mapping, PpmEncoding encoding) {
  std::ofstream out = open_out(path);
  write_image_ppm(out, signal, mapping, encoding);
  finish_write(out, path);
}

}  // namespace dqqpft
