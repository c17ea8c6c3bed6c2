// Copyright 2026 The ratcp Authors
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

// Plain-text matrix and certificate files.
//
// Matrix file:
//
//   3
//   2/1 1/1 1/1
//   2/1 1/1
//   2/1
//
// The first line is n. Then come the n(n+1)/2 upper-triangle entries in
// row-major order as rational tokens separated by any whitespace. The
// writer emits one matrix row per line and always writes "p/q" with q >= 1
// in lowest terms; the reader also accepts plain integers and non-reduced
// fractions.
//
// Certificate file:
//
//   2 3
//   1/1 1 0
//   1/1 0 1
//   1/1 1 1
//
// The first line holds n and the atom count m. Each of the next m lines is
// "alpha v_1 ... v_n": a rational coefficient followed by n nonnegative
// decimal integers. Blank lines after the last atom are ignored; anything
// else is an error.

#ifndef RATCP_IO_HPP_
#define RATCP_IO_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ratcp/certificate.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

// Malformed input. line and column are 1-based and point at the offending
// token (or just past the end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

void write_matrix(std::ostream& os, const SymMatrix& a);
SymMatrix read_matrix(std::istream& is);

void write_certificate(std::ostream& os, const Certificate& cert);
Certificate read_certificate(std::istream& is);

std::string format_matrix(const SymMatrix& a);
SymMatrix parse_matrix(const std::string& text);
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace ratcp

#endif  // RATCP_IO_HPP_
