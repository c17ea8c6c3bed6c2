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

// Separation over nonnegative integer vectors, simultaneous Diophantine
// approximation, and the small-quadratic-value construction for matrices
// with a positive zero direction.

#ifndef RATCP_LATTICE_HPP_
#define RATCP_LATTICE_HPP_

#include <cstddef>
#include <vector>

#include "ratcp/rational.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

class SeparationConfig {
 public:
  // Throws std::invalid_argument if either bound is zero.
  SeparationConfig(std::size_t linf_bound, std::size_t max_violations);

  std::size_t linf_bound() const { return linf_bound_; }
  std::size_t max_violations() const { return max_violations_; }

 private:
  std::size_t linf_bound_;
  std::size_t max_violations_;
};

// Primitive v in Z^n_{>=0} with 1 <= |v|_inf <= R and v^T B v < 1, in shell
// order (increasing |v|_inf, lexicographic inside a shell), truncated to
// max_violations. An empty result only certifies the bound R.
std::vector<LatticeVector> find_violations(const SymMatrix& b, const SeparationConfig& cfg);

// Same enumeration with an arbitrary strict threshold: v^T B v < threshold.
std::vector<LatticeVector> find_below(const SymMatrix& b, const Rational& threshold,
                                      const SeparationConfig& cfg);

// Every primitive v with 1 <= |v|_inf <= R, in shell order.
std::vector<LatticeVector> primitive_vectors(std::size_t n, std::size_t linf_bound);

// Worker threads used by the enumeration: RATCP_THREADS if set to a
// positive integer, else the hardware concurrency.
std::size_t separation_threads();

class DirichletResult {
 public:
  // Checks 1 <= q <= eps^-n and |alpha_i - p_i/q| <= eps/q against the
  // inputs; throws std::logic_error otherwise.
  DirichletResult(std::vector<Integer> p, Integer q, Rational epsilon,
                  const std::vector<Rational>& alphas);

  const std::vector<Integer>& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Rational& epsilon() const { return epsilon_; }

 private:
  std::vector<Integer> p_;
  Integer q_;
  Rational epsilon_;
};

// Smallest q in 1..floor(eps^-n) with p_i = round(q alpha_i) satisfying
// |alpha_i - p_i/q| <= eps/q for all i. Throws std::invalid_argument unless
// 0 < eps < 1 and alphas is nonempty.
DirichletResult dirichlet(const std::vector<Rational>& alphas, const Rational& epsilon);

struct Refutation {
  LatticeVector p;
  Integer q;
  // <B, p p^T>; below 1 means B violates the constraint at p.
  Rational value;
};

// For B with x^T B x = 0 at an entrywise positive x: approximates x by p/q,
// clamps p to be nonnegative and reports p^T B p. Throws
// std::invalid_argument if x is not positive, x^T B x != 0, eps is outside
// (0, 1), or p is zero after clamping.
Refutation refute_membership(const SymMatrix& b, const Vector& x, const Rational& epsilon);

}  // namespace ratcp

#endif  // RATCP_LATTICE_HPP_
