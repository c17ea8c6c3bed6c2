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

#include "ratcp/instances.hpp"

#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "ratcp/lattice.hpp"

namespace ratcp {
namespace {

// Unbiased integer in [lo, hi] from a 64-bit engine; see the header for the
// exact mapping.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t rem = (0 - span) % span;  // 2^64 mod span
  for (;;) {
    const std::uint64_t x = rng();
    if (rem == 0 || x <= std::numeric_limits<std::uint64_t>::max() - rem) return lo + x % span;
  }
}

Rational q(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

SymMatrix sum_of(const std::vector<Atom>& atoms, std::size_t n) {
  SymMatrix a(n);
  for (const auto& atom : atoms) a += atom.alpha * rank_one(atom.v);
  return a;
}

Certificate certificate_of(std::size_t n, std::vector<Atom> atoms) {
  Certificate c;
  c.n = n;
  c.atoms = std::move(atoms);
  return c;
}

SymMatrix off_diagonal_pair(std::size_t n, std::size_t i, std::size_t j) {
  SymMatrix c(n);
  c.set(i, j, 1);
  return c;
}

}  // namespace

std::size_t max_random_atoms(std::size_t n) { return n < 2 ? 0 : (n - 2) * (n + 1) / 2; }

InteriorInstance generate_interior(std::size_t n, std::uint64_t seed,
                                   const GenerateOptions& options) {
  if (n == 0) throw std::invalid_argument("generate_interior: n must be >= 1");
  if (options.coeff_bound == 0 || options.coord_bound == 0) {
    throw std::invalid_argument("generate_interior: bounds must be >= 1");
  }
  const std::size_t k = options.random_atoms.value_or(max_random_atoms(n));

  std::set<LatticeVector> excluded;
  for (std::size_t i = 0; i < n; ++i) excluded.insert(LatticeVector::unit(n, i));
  excluded.insert(LatticeVector::ones(n));

  // Refuse requests that rejection sampling could never satisfy.
  double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(options.coord_bound + 1);
  if (k > 0 && space < 1e6) {
    std::size_t available = 0;
    for (const auto& v : primitive_vectors(n, options.coord_bound)) {
      available += excluded.count(v) == 0;
    }
    if (available < k) {
      throw std::invalid_argument("generate_interior: only " + std::to_string(available) +
                                  " distinct primitive vectors available for " + std::to_string(k) +
                                  " random atoms");
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<LatticeVector> vectors;
  while (vectors.size() < k) {
    std::vector<Integer> coords(n);
    bool nonzero = false;
    for (auto& c : coords) {
      c = static_cast<unsigned long>(draw(rng, 0, options.coord_bound));
      nonzero |= c != 0;
    }
    if (!nonzero) continue;
    LatticeVector v(std::move(coords));
    if (!v.is_primitive() || !excluded.insert(v).second) continue;
    vectors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) vectors.push_back(LatticeVector::unit(n, i));
  // For n = 1 the unit vector is already the positive one.
  if (n > 1) vectors.push_back(LatticeVector::ones(n));

  std::vector<Atom> atoms;
  for (auto& v : vectors) {
    const auto num = draw(rng, 1, options.coeff_bound);
    const auto den = draw(rng, 1, options.coeff_bound);
    atoms.push_back({Rational(Integer(static_cast<unsigned long>(num)),
                              Integer(static_cast<unsigned long>(den))),
                     std::move(v)});
  }
  InteriorInstance inst{sum_of(atoms, n), certificate_of(n, std::move(atoms)), seed};
  return inst;
}

std::vector<BoundaryExample> boundary_examples(std::size_t n) {
  if (n < 2) throw std::invalid_argument("boundary_examples: n must be >= 2");
  std::vector<BoundaryExample> out;

  std::vector<Atom> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back({q(1), LatticeVector::unit(n, i)});
  out.push_back(
      {"identity", SymMatrix::identity(n), off_diagonal_pair(n, 0, 1), certificate_of(n, units)});

  // J_n is rank one; (e1 - e2)(e1 - e2)^T is positive semidefinite.
  SymMatrix psd(n);
  psd.set(0, 0, 1);
  psd.set(1, 1, 1);
  psd.set(0, 1, -1);
  std::vector<Atom> ones{{q(1), LatticeVector::ones(n)}};
  out.push_back({"all-ones", sum_of(ones, n), psd, certificate_of(n, ones)});

  if (n == 2) {
    std::vector<Atom> diag{{q(1), LatticeVector::unit(2, 0)}, {q(2), LatticeVector::unit(2, 1)}};
    out.push_back(
        {"diagonal", sum_of(diag, 2), off_diagonal_pair(2, 0, 1), certificate_of(2, diag)});
  } else {
    std::vector<Integer> tail(n, 1);
    tail[0] = 0;
    std::vector<Atom> split{{q(1), LatticeVector::unit(n, 0)}, {q(1), LatticeVector(tail)}};
    out.push_back(
        {"split", sum_of(split, n), off_diagonal_pair(n, 0, 1), certificate_of(n, split)});
  }
  return out;
}

std::vector<KernelExample> kernel_examples() {
  auto m = [](std::vector<std::vector<Rational>> rows) { return SymMatrix::from_rows(rows); };
  std::vector<KernelExample> out;
  out.push_back({"difference", m({{1, -1}, {-1, 1}}), {q(1), q(1)}});
  out.push_back({"difference-half", m({{1, -1}, {-1, 1}}), {q(1, 2), q(1, 2)}});
  out.push_back({"scaled-difference", m({{4, -2}, {-2, 1}}), {q(1, 3), q(2, 3)}});
  out.push_back({"triangle-laplacian",
                 m({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                 {q(1, 2), q(1, 2), q(1, 2)}});
  out.push_back({"path-laplacian",
                 m({{1, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 1}}),
                 {q(1), q(1), q(1), q(1)}});
  return out;
}

}  // namespace ratcp
