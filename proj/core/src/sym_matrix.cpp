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

#include "ratcp/sym_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ratcp {

SymMatrix::SymMatrix(std::size_t n) : n_(n), upper_(svec_dim(n)) {
  if (n == 0) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::from_upper(std::size_t n, std::vector<Rational> upper) {
  SymMatrix m(n);
  if (upper.size() != svec_dim(n)) {
    throw std::invalid_argument("SymMatrix: expected " + std::to_string(svec_dim(n)) +
                                " upper-triangle entries, got " + std::to_string(upper.size()));
  }
  m.upper_ = std::move(upper);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("SymMatrix: rows are not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("SymMatrix: not symmetric");
    }
    for (std::size_t j = i; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Rational SymMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += rhs.upper_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Rational& s) {
  for (auto& e : upper_) e *= s;
  return *this;
}

std::string SymMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("LatticeVector: empty");
  bool nonzero = false;
  for (const auto& c : coords_) {
    if (c < 0) throw std::invalid_argument("LatticeVector: negative coordinate");
    if (c != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("LatticeVector: zero vector");
}

LatticeVector::LatticeVector(std::initializer_list<long> coords)
    : LatticeVector(std::vector<Integer>(coords.begin(), coords.end())) {}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  std::vector<Integer> c(n, 0);
  c.at(i) = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::ones(std::size_t n) {
  return LatticeVector(std::vector<Integer>(n, 1));
}

Integer LatticeVector::linf_norm() const {
  Integer m = 0;
  for (const auto& c : coords_) {
    if (c > m) m = c;
  }
  return m;
}

bool LatticeVector::is_primitive() const {
  Integer g = 0;
  for (const auto& c : coords_) g = gcd(g, c);
  return g == 1;
}

Vector LatticeVector::to_rationals() const { return Vector(coords_.begin(), coords_.end()); }

std::string LatticeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += coords_[i].get_str();
  }
  return s + ')';
}

Rational inner_product(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  const std::size_t n = a.dim();
  Rational diag;
  Rational off;
  for (std::size_t i = 0; i < n; ++i) {
    diag += a(i, i) * b(i, i);
    for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * b(i, j);
  }
  return diag + Rational(2) * off;
}

SymMatrix rank_one(const LatticeVector& v) {
  const std::size_t n = v.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, Rational(Integer(v[i] * v[j])));
  }
  return m;
}

Rational quadratic_form(const SymMatrix& b, const Vector& x) {
  if (x.size() != b.dim()) throw std::invalid_argument("quadratic_form: dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      sum += x[i] * b(i, j) * x[j];
    }
  }
  return sum;
}

Rational quadratic_form(const SymMatrix& b, const LatticeVector& v) {
  return quadratic_form(b, v.to_rationals());
}

Vector svec(const SymMatrix& a) { return a.upper(); }

Vector svec_weighted(const SymMatrix& a) {
  Vector y;
  y.reserve(svec_dim(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    y.push_back(a(i, i));
    for (std::size_t j = i + 1; j < a.dim(); ++j) y.push_back(Rational(2) * a(i, j));
  }
  return y;
}

SymMatrix unsvec(const Vector& y, std::size_t n) { return SymMatrix::from_upper(n, y); }

SymMatrix unsvec_weighted(const Vector& y, std::size_t n) {
  SymMatrix m = SymMatrix::from_upper(n, y);
  const Rational half(Integer(1), Integer(2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, m(i, j) * half);
  }
  return m;
}

Rational weighted_dot(const Vector& x, const Vector& y, std::size_t n) {
  if (x.size() != svec_dim(n) || y.size() != svec_dim(n)) {
    throw std::invalid_argument("weighted_dot: length mismatch");
  }
  Rational diag;
  Rational off;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diag += x[k] * y[k];
    ++k;
    for (std::size_t j = i + 1; j < n; ++j, ++k) off += x[k] * y[k];
  }
  return diag + Rational(2) * off;
}

}  // namespace ratcp
