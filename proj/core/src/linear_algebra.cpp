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

#include "ratcp/linear_algebra.hpp"

#include <stdexcept>

namespace ratcp {
namespace {

// Reduced row echelon form of [m | b] in place. Pivots are the first nonzero
// entry in each column scan; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Echelon basis that remembers how each basis vector was built from the
// input vectors, so dependencies can be reported in input coordinates.
class TrackedBasis {
 public:
  TrackedBasis(std::size_t dim, std::size_t count) : dim_(dim), count_(count) {}

  // Reduces v against the basis. If the residual is zero, returns the
  // combination beta (over the inputs) with beta . inputs == 0 and
  // beta[index] == -1. Otherwise inserts it and returns nullopt.
  std::optional<Vector> insert(const Vector& v, std::size_t index) {
    if (v.size() != dim_) throw std::invalid_argument("vectors have different lengths");
    Vector residual = v;
    Vector combo(count_);
    combo[index] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = residual[pivots_[k]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        if (!rows_[k][c].is_zero()) residual[c] -= f * rows_[k][c];
      }
      for (std::size_t c = 0; c < count_; ++c) {
        if (!combos_[k][c].is_zero()) combo[c] -= f * combos_[k][c];
      }
    }
    std::size_t p = 0;
    while (p < dim_ && residual[p].is_zero()) ++p;
    if (p == dim_) {
      for (auto& c : combo) c = -c;
      return combo;
    }
    const Rational inv = residual[p].reciprocal();
    for (auto& c : residual) c *= inv;
    for (auto& c : combo) c *= inv;
    rows_.push_back(std::move(residual));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
    return std::nullopt;
  }

 private:
  std::size_t dim_;
  std::size_t count_;
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix: product dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

LinearSolution solve_linear_system(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear_system: b has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return NoSolution{};
  if (pivots.size() < m.cols()) return Underdetermined{};
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return Unique{std::move(x)};
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::vector<std::size_t> independent_subset(std::span<const Vector> vectors) {
  std::vector<std::size_t> kept;
  if (vectors.empty()) return kept;
  // The tracked combinations are not needed here, so use count 1 scratch.
  TrackedBasis basis(vectors.front().size(), 1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!basis.insert(vectors[i], 0)) kept.push_back(i);
  }
  return kept;
}

std::optional<Vector> linear_dependency(std::span<const Vector> vectors) {
  if (vectors.empty()) return std::nullopt;
  TrackedBasis basis(vectors.front().size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (auto beta = basis.insert(vectors[i], i)) return beta;
  }
  return std::nullopt;
}

}  // namespace ratcp
