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

// Test corpora with known answers.
//
// Interior instances are built as A = sum_i alpha_i v_i v_i^T where the
// atoms include every unit vector and the all-ones vector, each with a
// positive coefficient. The unit vectors span R^n and the all-ones vector is
// strictly positive, which places A in the interior of the completely
// positive cone.
//
// Randomness is std::mt19937_64 seeded with `seed`. An integer in [lo, hi]
// is drawn as lo + (x mod span) from the next 64-bit output x, rejecting
// x >= 2^64 - (2^64 mod span) so the draw is unbiased. Draw order:
//   1. k random atoms, one coordinate at a time (coordinates in
//      [0, coord_bound]); a vector is redrawn if it is zero, not
//      primitive, a unit vector, the all-ones vector, or already drawn;
//   2. one coefficient per atom (random atoms, then e_1..e_n, then the
//      all-ones vector): numerator then denominator, both in
//      [1, coeff_bound].

#ifndef RATCP_INSTANCES_HPP_
#define RATCP_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratcp/certificate.hpp"
#include "ratcp/rational.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

struct InteriorInstance {
  SymMatrix a;
  Certificate witness;
  std::uint64_t seed = 0;
};

struct GenerateOptions {
  std::uint64_t coeff_bound = 10;
  std::uint64_t coord_bound = 3;
  // Number of random atoms; defaults to the largest k that keeps the
  // witness within n(n+1)/2 atoms, i.e. (n-2)(n+1)/2 for n >= 2.
  std::optional<std::size_t> random_atoms;
};

// Default for GenerateOptions::random_atoms.
std::size_t max_random_atoms(std::size_t n);

// Deterministic in (n, seed, options). Throws std::invalid_argument if n is
// zero, a bound is zero, or the requested random atoms cannot be drawn
// (too few distinct primitive vectors within coord_bound).
InteriorInstance generate_interior(std::size_t n, std::uint64_t seed,
                                   const GenerateOptions& options = {});

// Boundary member A of the completely positive cone with a nonzero
// copositive C such that <A, C> = 0, and a factorization of A.
struct BoundaryExample {
  std::string name;
  SymMatrix a;
  SymMatrix c;
  Certificate factorization;
};

// Throws std::invalid_argument if n < 2.
std::vector<BoundaryExample> boundary_examples(std::size_t n);

// Positive semidefinite (hence copositive) B with an entrywise positive
// rational x in its kernel, so x^T B x = 0.
struct KernelExample {
  std::string name;
  SymMatrix b;
  Vector x;
};

std::vector<KernelExample> kernel_examples();

}  // namespace ratcp

#endif  // RATCP_INSTANCES_HPP_
