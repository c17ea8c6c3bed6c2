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

#include "ratcp/verify.hpp"

#include <vector>

namespace ratcp {
namespace {

Verdict invalid(std::string reason) { return Verdict{false, std::move(reason)}; }

}  // namespace

Verdict verify_certificate(const SymMatrix& a, const Certificate& cert) {
  const std::size_t n = a.dim();
  if (cert.n != n) return invalid("dimension mismatch");
  for (const auto& atom : cert.atoms) {
    if (atom.v.size() != n) return invalid("dimension mismatch");
  }
  for (const auto& atom : cert.atoms) {
    if (atom.alpha.sign() < 0) return invalid("negative coefficient");
  }
  for (const auto& atom : cert.atoms) {
    bool nonzero = false;
    for (const auto& c : atom.v.coords()) {
      if (c < 0) return invalid("invalid lattice vector");
      if (c != 0) nonzero = true;
    }
    if (!nonzero) return invalid("invalid lattice vector");
  }

  // Full n x n accumulation, each entry as an exact mpq.
  std::vector<mpq_class> sum(n * n);
  for (const auto& atom : cert.atoms) {
    const mpq_class& alpha = atom.alpha.raw();
    for (std::size_t i = 0; i < n; ++i) {
      if (atom.v[i] == 0) continue;
      const mpq_class scaled = alpha * mpq_class(atom.v[i]);
      for (std::size_t j = 0; j < n; ++j) {
        sum[i * n + j] += scaled * mpq_class(atom.v[j]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sum[i * n + j] != a(i, j).raw()) return invalid("sum mismatch");
    }
  }

  if (cert.atoms.size() > n * (n + 1) / 2) return invalid("too many atoms");
  return Verdict{true, {}};
}

}  // namespace ratcp
