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

#ifndef RATCP_CERTIFICATE_HPP_
#define RATCP_CERTIFICATE_HPP_

#include <cstddef>
#include <vector>

#include "ratcp/rational.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp {

// One term alpha v v^T of a factorization.
struct Atom {
  Rational alpha;
  LatticeVector v;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// How a certificate was produced. Not part of the file format.
struct CertificateMeta {
  Rational lambda;
  std::size_t final_r = 0;
  std::size_t lp_iterations = 0;
  std::size_t separation_rounds = 0;
};

// Claim A = sum_i alpha_i v_i v_i^T with alpha_i >= 0 and v_i >= 0 integral.
// Nothing is checked at construction; see verify_certificate.
struct Certificate {
  std::size_t n = 0;
  std::vector<Atom> atoms;
  CertificateMeta meta;

  // Compares dimension and atoms only.
  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.n == b.n && a.atoms == b.atoms;
  }
};

}  // namespace ratcp

#endif  // RATCP_CERTIFICATE_HPP_
