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

#ifndef RATCP_VERIFY_HPP_
#define RATCP_VERIFY_HPP_

#include <string>

#include "ratcp/certificate.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

struct Verdict {
  bool valid = false;
  // First failed check, empty when valid. One of "dimension mismatch",
  // "negative coefficient", "invalid lattice vector", "sum mismatch",
  // "too many atoms".
  std::string reason;

  explicit operator bool() const { return valid; }
};

// Checks, in order: dimensions, coefficient signs, lattice vectors, the
// exact sum, and the atom count n(n+1)/2. Total: never throws on bad input.
// The accumulation is done here on a full square and does not reuse the
// SymMatrix arithmetic the factorizer relies on.
Verdict verify_certificate(const SymMatrix& a, const Certificate& cert);

}  // namespace ratcp

#endif  // RATCP_VERIFY_HPP_
