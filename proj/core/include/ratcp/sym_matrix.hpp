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

// Symmetric rational matrices, nonnegative lattice vectors and the
// coordinates used to turn the space of symmetric matrices into R^d.
//
// Coordinates. For an n x n symmetric matrix, d = n(n+1)/2 and the
// coordinates are the upper triangle read row by row:
//
//   svec(A)          = (A00, A01, ..., A0n-1, A11, A12, ..., An-1n-1)
//   svec_weighted(A) = same, with every off-diagonal entry multiplied by 2
//
// so that <A, B> = Trace(AB) = dot(svec(A), svec_weighted(B)). Using 2
// instead of sqrt(2) keeps every coordinate rational.

#ifndef RATCP_SYM_MATRIX_HPP_
#define RATCP_SYM_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ratcp/rational.hpp"

namespace ratcp {

// Number of upper-triangle coordinates of an n x n symmetric matrix.
constexpr std::size_t svec_dim(std::size_t n) { return n * (n + 1) / 2; }

class SymMatrix {
 public:
  // Zero matrix of dimension n >= 1.
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);
  // Upper-triangle entries, row-major. Throws std::invalid_argument if the
  // length is not n(n+1)/2.
  static SymMatrix from_upper(std::size_t n, std::vector<Rational> upper);
  // Full square rows; throws std::invalid_argument unless square and
  // symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, Rational value) { upper_[index(i, j)] = std::move(value); }
  const std::vector<Rational>& upper() const { return upper_; }

  Rational trace() const;

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator*=(const Rational& s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator*(const Rational& s, SymMatrix a) { return a *= s; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_;
  std::vector<Rational> upper_;
};

// Nonzero vector with nonnegative integer coordinates.
class LatticeVector {
 public:
  // Throws std::invalid_argument if empty, any coordinate is negative, or
  // every coordinate is zero.
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  // Unit vector e_i in dimension n.
  static LatticeVector unit(std::size_t n, std::size_t i);
  static LatticeVector ones(std::size_t n);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  Integer linf_norm() const;
  // gcd of the coordinates equals 1.
  bool is_primitive() const;
  Vector to_rationals() const;
  std::string to_string() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic on coordinates.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

// <A, B> = Trace(AB) = sum_ij A_ij B_ij. Throws std::invalid_argument on
// dimension mismatch.
Rational inner_product(const SymMatrix& a, const SymMatrix& b);

// v v^T. LatticeVector already rules out the zero vector.
SymMatrix rank_one(const LatticeVector& v);

// x^T B x by direct double summation over the full square.
Rational quadratic_form(const SymMatrix& b, const Vector& x);
Rational quadratic_form(const SymMatrix& b, const LatticeVector& v);

Vector svec(const SymMatrix& a);
Vector svec_weighted(const SymMatrix& a);
// Inverse of svec. Throws std::invalid_argument on length mismatch.
SymMatrix unsvec(const Vector& y, std::size_t n);
// Inverse of svec_weighted.
SymMatrix unsvec_weighted(const Vector& y, std::size_t n);
// sum_k w_k x_k y_k with w_k = 2 on off-diagonal coordinates, so that
// weighted_dot(svec(A), svec(B)) == inner_product(A, B).
Rational weighted_dot(const Vector& x, const Vector& y, std::size_t n);

}  // namespace ratcp

#endif  // RATCP_SYM_MATRIX_HPP_
