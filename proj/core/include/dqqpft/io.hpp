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


// Text and image formats for quaternion signals.
//
// qcsv is line oriented:
//
//   qcsv,1
//   size,<n1>,<n2>
//   dt,<dt1>,<dt2>
//   params,<a1>,<b1>,<c1>,<d1>,<e1>:<a2>,<b2>,<c2>,<d2>,<e2>
//   <w>,<x>,<y>,<z>          n1 * n2 rows, row-major
//
// Values are written with 17 significant digits, so write then read is
// bit-exact. Blank lines are not allowed; a trailing newline is optional.
//
// Images are PPM (P3 or P6, maxval <= 255). Row r of the image is sample
// row x1 = r, so the image height is n1.

#ifndef DQQPFT_IO_HPP_
#define DQQPFT_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dqqpft/signal.hpp"
#include "dqqpft/transform.hpp"

namespace dqqpft {

// File cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Base of every qcsv content error. line() is 1-based.
class QcsvError : public std::runtime_error {
 public:
  QcsvError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MalformedHeader : public QcsvError {
 public:
  using QcsvError::QcsvError;
};

// Body row count or row width disagrees with the header.
class DimensionMismatch : public QcsvError {
 public:
  using QcsvError::QcsvError;
};

// A body value that is not a decimal number.
class MalformedRow : public QcsvError {
 public:
  using QcsvError::QcsvError;
};

class NonFiniteValue : public QcsvError {
 public:
  using QcsvError::QcsvError;
};

// Unsupported or corrupt PPM.
class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QcsvFile {
  QSignal2D signal;
  TransformConfig config;  // two-sided
};

// A header with b == 0 raises ParameterError.
QcsvFile read_qcsv(std::istream& in);
QcsvFile read_qcsv(const std::filesystem::path& path);

// The signal shape must match cfg.
void write_qcsv(std::ostream& out, const QSignal2D& signal,
                const TransformConfig& cfg);
void write_qcsv(const std::filesystem::path& path, const QSignal2D& signal,
                const TransformConfig& cfg);

enum class ImageMapping {
  // (R, G, B) -> R i + G j + B k. Writing drops w.
  pure,
  // w = (299 R + 587 G + 114 B) / 1000. Writing sets R = G = B = w.
  luminance,
};

// "pure" or "luminance"; throws std::invalid_argument otherwise.
ImageMapping parse_mapping(const std::string& text);

enum class PpmEncoding { binary, ascii };

QSignal2D read_image_ppm(std::istream& in, ImageMapping mapping);
QSignal2D read_image_ppm(const std::filesystem::path& path,
                         ImageMapping mapping);

// Channels are rounded and clamped to [0, 255]; maxval is 255.
void write_image_ppm(std::ostream& out, const QSignal2D& signal,
                     ImageMapping mapping,
                     PpmEncoding encoding = PpmEncoding::binary);
void write_image_ppm(const std::filesystem::path& path, const QSignal2D& signal,
                     ImageMapping mapping,
                     PpmEncoding encoding = PpmEncoding::binary);

}  // namespace dqqpft

#endif  // DQQPFT_IO_HPP_
