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

// Exact Gaussian elimination over the rationals.

#ifndef RATCP_LINEAR_ALGEBRA_HPP_
#define RATCP_LINEAR_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ratcp/rational.hpp"

namespace ratcp {

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vector>& rows);
  // Every column must have the same length; an empty list gives a
  // `rows` x 0 matrix.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector operator*(const Vector& x) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Unique {
  Vector x;
};
struct NoSolution {};
struct Underdetermined {};
using LinearSolution = std::variant<Unique, NoSolution, Underdetermined>;

// Solves M x = b. Unique iff M has full column rank and b is in its column
// space; NoSolution iff the system is inconsistent (checked first).
// Throws std::invalid_argument if b.size() != M.rows().
LinearSolution solve_linear_system(const Matrix& m, const Vector& b);

std::size_t rank(const Matrix& m);

// Greedy scan in the given order: index i is kept iff vectors[i] is
// linearly independent of the vectors kept before it. Zero vectors are never
// kept. Throws std::invalid_argument on ragged input.
std::vector<std::size_t> independent_subset(std::span<const Vector> vectors);

// Returns a nonzero beta with sum_i beta_i vectors[i] = 0, or nullopt if the
// vectors are linearly independent. The dependency is the one exposed by the
// first vector (in scan order) that is dependent on its predecessors; that
// vector's coefficient is -1.
std::optional<Vector> linear_dependency(std::span<const Vector> vectors);

}  // namespace ratcp

#endif  // RATCP_LINEAR_ALGEBRA_HPP_
