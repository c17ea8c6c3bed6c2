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

// Rational cp-factorization by cutting planes.
//
// For A in the interior of the completely positive cone, the set
//
//   P(A, lambda) = { B symmetric : <A, B> <= lambda,
//                    <B, v v^T> >= 1 for every nonzero v in Z^n_{>=0} }
//
// is a polytope. factorize() minimizes <A, B> over it by cutting planes
// (constraints for v are added as the lattice oracle finds them), reads off
// the atoms v v^T that are tight at the optimal vertex B*, expresses A as a
// nonnegative combination of them, prunes that combination to linearly
// independent atoms, and solves for the unique rational coefficients.
//
// Every Success certificate has been checked by verify_certificate.

#ifndef RATCP_FACTORIZER_HPP_
#define RATCP_FACTORIZER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratcp/certificate.hpp"
#include "ratcp/lp.hpp"
#include "ratcp/rational.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

struct FactorizeConfig {
  std::size_t initial_r = 2;
  std::size_t max_r = 8;
  // lambda = lambda_policy * trace(A); must be >= 1 so the identity stays
  // feasible.
  Rational lambda_policy = 1;
  std::size_t max_rounds = 200;
  // Cuts added per separation call.
  std::size_t cuts_per_round = 32;

  // Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

struct FactorizeStats {
  Rational lambda;
  std::size_t final_r = 0;
  std::size_t rounds = 0;
  std::size_t lp_solves = 0;
  std::size_t lp_iterations = 0;
  std::size_t separation_rounds = 0;
  std::size_t constraints = 0;
  // <A, B*> after every LP solve, in order.
  std::vector<Rational> lp_values;
};

struct Success {
  Certificate certificate;
  FactorizeStats stats;
};

// The round budget ran out before a separation-clean vertex was reached.
struct BoundExceeded {
  std::size_t final_r = 0;
  std::optional<SymMatrix> best;
  FactorizeStats stats;
};

// A direction D with <A, D> < 0 and v^T D v >= 0 for every lattice vector
// tried (all primitive v up to max_r). If D were copositive, A would lie
// outside the completely positive cone.
struct NotInteriorSuspected {
  SymMatrix witness;
  std::string evidence;
  FactorizeStats stats;
};

using FactorizeOutcome = std::variant<Success, BoundExceeded, NotInteriorSuspected>;

// lambda_policy * trace(A). Throws std::invalid_argument if trace(A) <= 0.
Rational choose_lambda(const SymMatrix& a, const FactorizeConfig& cfg);

// Throws std::invalid_argument on an invalid configuration and
// std::logic_error if an internal consistency check fails.
FactorizeOutcome factorize(const SymMatrix& a, const FactorizeConfig& cfg = {});

struct Combination {
  std::vector<LatticeVector> atoms;
  std::vector<Rational> coefficients;
};

// Prunes sum_i mu_i v_i v_i^T = A to linearly independent atoms with
// nonnegative coefficients. Zero coefficients are dropped. Throws
// std::invalid_argument if the input combination does not reproduce A or
// has a negative coefficient.
Combination caratheodory_reduce(const std::vector<LatticeVector>& atoms,
                                const std::vector<Rational>& coefficients, const SymMatrix& a);

// The unique alpha with sum_i alpha_i v_i v_i^T = A. Throws std::logic_error
// if the system is not uniquely solvable or some alpha_i is negative.
std::vector<Rational> solve_coefficients(const std::vector<LatticeVector>& atoms,
                                         const SymMatrix& a);

// Largest mu >= 0 such that <B + mu C, v v^T> >= 1 stays true for every v
// in `constraints`; nullopt if no constraint limits the step.
std::optional<Rational> max_feasible_step(const SymMatrix& b, const SymMatrix& c,
                                          const std::vector<LatticeVector>& constraints);

}  // namespace ratcp

#endif  // RATCP_FACTORIZER_HPP_
