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

#include "ratcp/io.hpp"

#include <cctype>
#include <iterator>
#include <sstream>
#include <vector>

namespace ratcp {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines(1);
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      lines.emplace_back();
      ++line;
      column = 1;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++column;
      ++i;
    } else {
      Token t{{}, line, column};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        t.text += text[i++];
        ++column;
      }
      lines.back().push_back(std::move(t));
    }
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw ParseError(t.line, t.column, message);
}

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_natural(const Token& t, const char* what) {
  if (!is_digits(t.text)) fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
  return Integer(t.text, 10);
}

std::size_t parse_size(const Token& t, const char* what) {
  const Integer v = parse_natural(t, what);
  if (!v.fits_ulong_p()) fail(t, std::string(what) + " is too large");
  return v.get_ui();
}

Rational parse_rational(const Token& t) {
  try {
    return Rational::parse(t.text);
  } catch (const std::invalid_argument&) {
    fail(t, "expected a rational p/q, got '" + t.text + "'");
  }
}

// Position just past the last token, for "unexpected end of input".
Token end_of(const std::vector<Line>& lines) {
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    if (!it->empty()) {
      const Token& last = it->back();
      return {"", last.line, last.column + last.text.size()};
    }
  }
  return {"", 1, 1};
}

std::string slurp(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

void write_matrix(std::ostream& os, const SymMatrix& a) {
  const std::size_t n = a.dim();
  os << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) os << (j > i ? " " : "") << a(i, j).to_string();
    os << '\n';
  }
}

SymMatrix parse_matrix(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines[0].empty()) fail(end_of({lines[0]}), "expected the dimension n on the first line");
  if (lines[0].size() > 1) fail(lines[0][1], "the first line must hold only the dimension n");
  const std::size_t n = parse_size(lines[0][0], "a dimension");
  if (n == 0) fail(lines[0][0], "dimension must be at least 1");

  const std::size_t expected = svec_dim(n);
  std::vector<Rational> entries;
  entries.reserve(expected);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (const auto& t : lines[l]) {
      if (entries.size() == expected) fail(t, "unexpected token after the last matrix entry");
      entries.push_back(parse_rational(t));
    }
  }
  if (entries.size() < expected) {
    fail(end_of(lines), "expected " + std::to_string(expected) + " matrix entries, found " +
                            std::to_string(entries.size()));
  }
  return SymMatrix::from_upper(n, std::move(entries));
}

SymMatrix read_matrix(std::istream& is) { return parse_matrix(slurp(is)); }

std::string format_matrix(const SymMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

void write_certificate(std::ostream& os, const Certificate& cert) {
  os << cert.n << ' ' << cert.atoms.size() << '\n';
  for (const auto& atom : cert.atoms) {
    os << atom.alpha.to_string();
    for (const auto& c : atom.v.coords()) os << ' ' << c.get_str();
    os << '\n';
  }
}

Certificate parse_certificate(const std::string& text) {
  const auto lines = tokenize(text);
  const Line& head = lines[0];
  if (head.size() < 2) fail(end_of({head}), "expected 'n m' on the first line");
  if (head.size() > 2) fail(head[2], "the first line must hold only 'n m'");
  Certificate cert;
  cert.n = parse_size(head[0], "a dimension");
  if (cert.n == 0) fail(head[0], "dimension must be at least 1");
  const std::size_t m = parse_size(head[1], "an atom count");

  std::size_t l = 1;
  for (std::size_t k = 0; k < m; ++k, ++l) {
    if (l >= lines.size()) {
      fail(end_of(lines),
           "expected " + std::to_string(m) + " atom lines, found " + std::to_string(k));
    }
    const Line& row = lines[l];
    if (row.empty()) {
      fail(Token{"", l + 1, 1}, "expected an atom line 'alpha v_1 ... v_n'");
    }
    if (row.size() != cert.n + 1) {
      const Token& at = row.size() > cert.n + 1 ? row[cert.n + 1] : end_of({row});
      fail(at, "expected " + std::to_string(cert.n + 1) + " tokens 'alpha v_1 ... v_n', found " +
                   std::to_string(row.size()));
    }
    Rational alpha = parse_rational(row[0]);
    std::vector<Integer> coords;
    for (std::size_t i = 1; i <= cert.n; ++i) {
      coords.push_back(parse_natural(row[i], "a nonnegative integer coordinate"));
    }
    bool nonzero = false;
    for (const auto& c : coords) nonzero |= c != 0;
    if (!nonzero) fail(row[1], "lattice vector is zero");
    cert.atoms.push_back({std::move(alpha), LatticeVector(std::move(coords))});
  }
  for (; l < lines.size(); ++l) {
    if (!lines[l].empty()) fail(lines[l][0], "unexpected content after the last atom");
  }
  return cert;
}

Certificate read_certificate(std::istream& is) { return parse_certificate(slurp(is)); }

std::string format_certificate(const Certificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

}  // namespace ratcp
