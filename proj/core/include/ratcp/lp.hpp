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

// Exact rational simplex.
//
// solve_min handles inequality-form programs with free variables,
//
//   minimize c^T y   subject to   g_i^T y >= h_i,  i = 1..m,
//
// by running a two-phase simplex with Bland's rule on the dual
//
//   maximize h^T u   subject to   sum_i u_i g_i = c,  u >= 0.
//
// A basis of the dual is a set of d constraints with linearly independent
// normals, so the optimal basis is a vertex of the primal polyhedron and the
// basic dual values are the Lagrange multipliers of the vertex.

#ifndef RATCP_LP_HPP_
#define RATCP_LP_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "ratcp/linear_algebra.hpp"
#include "ratcp/rational.hpp"

namespace ratcp {

// g^T y >= h.
struct Constraint {
  Vector g;
  Rational h;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class LinearProgram {
 public:
  // Throws std::invalid_argument if any vector does not have length `dim`
  // or if a constraint appears twice.
  LinearProgram(std::size_t dim, Vector objective, std::vector<Constraint> constraints);

  std::size_t dim() const { return dim_; }
  const Vector& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::size_t dim_;
  Vector objective_;
  std::vector<Constraint> constraints_;
};

struct BasicSolution {
  Vector point;
  // Indices of every constraint that holds with equality, ascending.
  std::vector<std::size_t> active_set;
  // The d constraints whose normals form the optimal basis.
  std::vector<std::size_t> basis;
  // One nonnegative multiplier per constraint; zero off the basis.
  Vector multipliers;
  Rational objective_value;
  std::size_t pivots = 0;
};

struct Optimal {
  BasicSolution solution;
};
struct Infeasible {};
struct Unbounded {};
using LpResult = std::variant<Optimal, Infeasible, Unbounded>;

struct SimplexOptions {
  // Exceeding this is a bug: Bland's rule cannot cycle.
  std::size_t max_pivots = 1'000'000;
};

// Throws std::domain_error if the optimum is finite but the constraint
// normals do not span R^d (no vertex exists), and std::runtime_error if the
// pivot limit is hit.
LpResult solve_min(const LinearProgram& lp, const SimplexOptions& options = {});

struct InCone {
  Vector coefficients;
};
struct Separated {
  // witness . target < 0 and witness . generator_i >= 0 for every i.
  Vector witness;
};
using ConeMembership = std::variant<InCone, Separated>;

// Phase-I test of target in cone(generators). Throws std::invalid_argument
// on length mismatch.
ConeMembership cone_membership(const Vector& target, const std::vector<Vector>& generators,
                               const SimplexOptions& options = {});

namespace detail {

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded };

struct StandardFormResult {
  SimplexStatus status;
  Vector x;
  // Basic column per remaining row; columns >= a.cols() are artificials.
  std::vector<std::size_t> basis;
  // Rows found redundant after phase I (removed from the basis).
  std::vector<std::size_t> redundant_rows;
  // Only set when infeasible: phase-I row multipliers y (original row
  // signs) with y^T a_j <= 0 for every column and y^T b > 0.
  Vector farkas;
  std::size_t pivots = 0;
};

// minimize cost^T x subject to a x = b, x >= 0.
StandardFormResult solve_standard_form(const Matrix& a, const Vector& b, const Vector& cost,
                                       const SimplexOptions& options);

}  // namespace detail
}  // namespace ratcp

#endif  // RATCP_LP_HPP_
