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

#include "ratcp/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ratcp {

LinearProgram::LinearProgram(std::size_t dim, Vector objective, std::vector<Constraint> constraints)
    : dim_(dim), objective_(std::move(objective)), constraints_(std::move(constraints)) {
  if (objective_.size() != dim_) {
    throw std::invalid_argument("LinearProgram: objective has wrong length");
  }
  std::set<std::pair<Vector, Rational>> seen;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    if (c.g.size() != dim_) {
      throw std::invalid_argument("LinearProgram: constraint " + std::to_string(i) +
                                  " has wrong length");
    }
    if (!seen.emplace(c.g, c.h).second) {
      throw std::invalid_argument("LinearProgram: duplicate constraint " + std::to_string(i));
    }
  }
}

namespace detail {
namespace {

// Dense simplex tableau [B^-1 A | B^-1 (artificials) | B^-1 b] with a
// reduced-cost row. Rows may be dropped once found redundant.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& b, std::size_t max_pivots)
      : n_(a.cols()), max_pivots_(max_pivots) {
    const std::size_t m = a.rows();
    width_ = n_ + m + 1;
    rows_.assign(m, Vector(width_));
    flip_.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      row_id_.push_back(i);
      const bool negate = b[i].sign() < 0;
      flip_[i] = negate ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = negate ? -a(i, j) : a(i, j);
      rows_[i][n_ + i] = 1;
      rows_[i][width_ - 1] = negate ? -b[i] : b[i];
      basis_.push_back(n_ + i);
    }
  }

  // Loads a cost vector over all columns (artificials included) and
  // rebuilds the reduced-cost row for the current basis.
  void set_cost(const Vector& cost) {
    cost_ = cost;
    reduced_.assign(width_, Rational());
    for (std::size_t j = 0; j + 1 < width_; ++j) reduced_[j] = cost_[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!rows_[i][j].is_zero()) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  Rational objective() const { return -reduced_[width_ - 1]; }

  // Runs Bland's rule over structural columns. Returns false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        const Rational ratio = rows_[i][width_ - 1] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  // Replaces basic artificials by structural columns after a feasible
  // phase I; rows with no structural entry are redundant and dropped.
  void drive_out_artificials(std::vector<std::size_t>& redundant) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && rows_[i][j].is_zero()) ++j;
      if (j < n_) {
        pivot(i, j);
        ++i;
        continue;
      }
      redundant.push_back(row_id_[i]);
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      row_id_.erase(row_id_.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  Vector solution() const {
    Vector x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_ - 1];
    }
    return x;
  }

  // Phase-I multipliers pi = c_B B^-1 in original row signs. The artificial
  // block of the tableau holds B^-1 (no rows dropped before this is used).
  Vector phase_one_multipliers() const {
    const std::size_t m = flip_.size();
    Vector pi(m);
    for (std::size_t r = 0; r < m; ++r) {
      // Reduced cost of artificial r is 1 - pi'_r.
      pi[r] = Rational(1) - reduced_[n_ + r];
      if (flip_[r] < 0) pi[r] = -pi[r];
    }
    return pi;
  }

  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t pivots() const { return pivots_; }

 private:
  void pivot(std::size_t r, std::size_t c) {
    if (++pivots_ > max_pivots_) {
      throw std::runtime_error("simplex: pivot limit exceeded (" + std::to_string(max_pivots_) +
                               ")");
    }
    Vector& prow = rows_[r];
    const Rational inv = prow[c].reciprocal();
    for (auto& e : prow) {
      if (!e.is_zero()) e *= inv;
    }
    auto eliminate = [&](Vector& row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(reduced_);
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t width_ = 0;
  std::size_t max_pivots_;
  std::size_t pivots_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_id_;
  std::vector<int> flip_;
  Vector cost_;
  Vector reduced_;
};

}  // namespace

StandardFormResult solve_standard_form(const Matrix& a, const Vector& b, const Vector& cost,
                                       const SimplexOptions& options) {
  if (b.size() != a.rows() || cost.size() != a.cols()) {
    throw std::invalid_argument("solve_standard_form: dimension mismatch");
  }
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  Tableau t(a, b, options.max_pivots);

  Vector phase_one(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase_one[j] = 1;
  t.set_cost(phase_one);
  t.optimize();  // bounded below by zero

  StandardFormResult out;
  if (t.objective().sign() > 0) {
    out.status = SimplexStatus::kInfeasible;
    out.farkas = t.phase_one_multipliers();
    out.basis = t.basis();
    out.pivots = t.pivots();
    return out;
  }

  t.drive_out_artificials(out.redundant_rows);
  Vector phase_two(n + m);
  std::copy(cost.begin(), cost.end(), phase_two.begin());
  t.set_cost(phase_two);
  const bool bounded = t.optimize();
  out.status = bounded ? SimplexStatus::kOptimal : SimplexStatus::kUnbounded;
  out.x = t.solution();
  out.basis = t.basis();
  out.pivots = t.pivots();
  return out;
}

}  // namespace detail

namespace {

// Feasibility of {y : G y >= h} through y = y+ - y-, G y+ - G y- - s = h.
bool primal_feasible(const LinearProgram& lp, const SimplexOptions& options, std::size_t& pivots) {
  const std::size_t d = lp.dim();
  const auto& cons = lp.constraints();
  const std::size_t m = cons.size();
  Matrix a(m, 2 * d + m);
  Vector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = cons[i].g[j];
      a(i, d + j) = -cons[i].g[j];
    }
    a(i, 2 * d + i) = -1;
    b[i] = cons[i].h;
  }
  const auto res = detail::solve_standard_form(a, b, Vector(2 * d + m), options);
  pivots += res.pivots;
  return res.status == detail::SimplexStatus::kOptimal;
}

}  // namespace

LpResult solve_min(const LinearProgram& lp, const SimplexOptions& options) {
  const std::size_t d = lp.dim();
  const auto& cons = lp.constraints();
  const std::size_t m = cons.size();

  // Dual in standard form: rows = coordinates, columns = constraints.
  Matrix a(d, m);
  Vector cost(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < d; ++r) a(r, i) = cons[i].g[r];
    cost[i] = -cons[i].h;
  }
  const auto dual = detail::solve_standard_form(a, lp.objective(), cost, options);
  std::size_t pivots = dual.pivots;

  switch (dual.status) {
    case detail::SimplexStatus::kUnbounded:
      return Infeasible{};
    case detail::SimplexStatus::kInfeasible:
      if (primal_feasible(lp, options, pivots)) return Unbounded{};
      return Infeasible{};
    case detail::SimplexStatus::kOptimal:
      break;
  }
  if (!dual.redundant_rows.empty()) {
    throw std::domain_error("solve_min: constraint normals do not span R^" + std::to_string(d) +
                            "; the optimum is not attained at a vertex");
  }

  BasicSolution sol;
  sol.basis = dual.basis;
  std::sort(sol.basis.begin(), sol.basis.end());
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i : sol.basis) {
    rows.push_back(cons[i].g);
    rhs.push_back(cons[i].h);
  }
  auto solved = solve_linear_system(Matrix::from_rows(rows), rhs);
  auto* unique = std::get_if<Unique>(&solved);
  if (unique == nullptr) throw std::logic_error("solve_min: optimal basis is singular");
  sol.point = std::move(unique->x);
  sol.multipliers = dual.x;
  sol.objective_value = dot(lp.objective(), sol.point);

  Rational dual_value;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational slack = dot(cons[i].g, sol.point) - cons[i].h;
    if (slack.sign() < 0) throw std::logic_error("solve_min: vertex violates a constraint");
    if (slack.is_zero()) sol.active_set.push_back(i);
    if (sol.multipliers[i].sign() < 0) throw std::logic_error("solve_min: negative multiplier");
    if (!sol.multipliers[i].is_zero()) {
      if (!slack.is_zero()) throw std::logic_error("solve_min: complementary slackness fails");
      dual_value += sol.multipliers[i] * cons[i].h;
    }
  }
  if (dual_value != sol.objective_value) {
    throw std::logic_error("solve_min: primal and dual objective values differ");
  }
  sol.pivots = pivots;
  return Optimal{std::move(sol)};
}

ConeMembership cone_membership(const Vector& target, const std::vector<Vector>& generators,
                               const SimplexOptions& options) {
  const std::size_t d = target.size();
  const Matrix a = Matrix::from_columns(generators, d);
  const auto res = detail::solve_standard_form(a, target, Vector(generators.size()), options);
  if (res.status == detail::SimplexStatus::kOptimal) {
    if (a * res.x != target) throw std::logic_error("cone_membership: combination mismatch");
    return InCone{res.x};
  }

  // farkas^T gen_j <= 0 and farkas^T target > 0; flip and clear denominators.
  Vector witness = res.farkas;
  Integer scale = 1;
  for (const auto& w : witness) scale = lcm(scale, w.den());
  Integer content = 0;
  for (auto& w : witness) {
    w = -w * Rational(scale);
    content = gcd(content, w.num());
  }
  if (content > 1) {
    for (auto& w : witness) w /= Rational(content);
  }
  if (dot(witness, target).sign() >= 0) {
    throw std::logic_error("cone_membership: witness does not separate the target");
  }
  for (const auto& g : generators) {
    if (dot(witness, g).sign() < 0) {
      throw std::logic_error("cone_membership: witness is negative on a generator");
    }
  }
  return Separated{std::move(witness)};
}

}  // namespace ratcp
