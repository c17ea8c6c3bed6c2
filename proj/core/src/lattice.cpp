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

#include "ratcp/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace ratcp {
namespace {

using Coords = std::vector<std::int64_t>;

// Shells with fewer candidates than this are scanned on the calling thread.
constexpr std::uint64_t kParallelShellSize = 1 << 14;

bool primitive(const Coords& v) {
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, c);
  return g == 1;
}

// Integer form of the test v^T B v < t: v^T M v < T with M = L B, T = L t.
template <typename Int>
struct IntegerForm {
  std::size_t n;
  std::vector<Int> m;  // full n x n
  Int threshold;

  bool below(const Coords& v) const {
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      const Int vi = static_cast<long>(v[i]);
      sum += m[i * n + i] * vi * vi;
      Int cross = 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (v[j] != 0) cross += m[i * n + j] * Int(static_cast<long>(v[j]));
      }
      sum += 2 * vi * cross;
    }
    return sum < threshold;
  }
};

// All primitive vectors of shell r whose first coordinate is `first`, in
// lexicographic order, that pass `keep`.
template <typename Keep>
std::vector<Coords> scan_block(std::size_t n, std::int64_t r, std::int64_t first,
                               const Keep& keep) {
  std::vector<Coords> out;
  Coords v(n, 0);
  v[0] = first;
  for (;;) {
    const bool in_shell = *std::max_element(v.begin(), v.end()) == r;
    if (in_shell && primitive(v) && keep(v)) out.push_back(v);
    std::size_t k = n;
    while (k > 1) {
      --k;
      if (v[k] < r) {
        ++v[k];
        break;
      }
      v[k] = 0;
      if (k == 1) return out;
    }
    if (n == 1) return out;
  }
}

template <typename Keep>
std::vector<Coords> scan_shell(std::size_t n, std::int64_t r, const Keep& keep) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n && size < kParallelShellSize; ++i) {
    size *= static_cast<std::uint64_t>(r + 1);
  }
  const std::size_t threads = std::min<std::size_t>(separation_threads(), r + 1);
  std::vector<std::vector<Coords>> blocks(static_cast<std::size_t>(r + 1));
  if (size < kParallelShellSize || threads <= 1) {
    for (std::int64_t c = 0; c <= r; ++c) blocks[c] = scan_block(n, r, c, keep);
  } else {
    std::vector<std::future<void>> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::int64_t c = static_cast<std::int64_t>(t); c <= r;
             c += static_cast<std::int64_t>(threads)) {
          blocks[c] = scan_block(n, r, c, keep);
        }
      }));
    }
    for (auto& w : workers) w.get();
  }
  // Blocks are ordered by first coordinate, so concatenation is lexicographic.
  std::vector<Coords> out;
  for (auto& b : blocks) {
    for (auto& v : b) out.push_back(std::move(v));
  }
  return out;
}

template <typename Keep>
std::vector<LatticeVector> enumerate(std::size_t n, std::size_t linf_bound, std::size_t limit,
                                     const Keep& keep) {
  std::vector<LatticeVector> out;
  for (std::size_t r = 1; r <= linf_bound && out.size() < limit; ++r) {
    for (auto& v : scan_shell(n, static_cast<std::int64_t>(r), keep)) {
      if (out.size() == limit) break;
      out.emplace_back(std::vector<Integer>(v.begin(), v.end()));
    }
  }
  return out;
}

bool fits_int64(const Integer& x) {
  static const Integer kLimit = Integer(1) << 62;
  return abs(x) < kLimit;
}

}  // namespace

SeparationConfig::SeparationConfig(std::size_t linf_bound, std::size_t max_violations)
    : linf_bound_(linf_bound), max_violations_(max_violations) {
  if (linf_bound_ == 0) throw std::invalid_argument("SeparationConfig: R must be >= 1");
  if (max_violations_ == 0) {
    throw std::invalid_argument("SeparationConfig: max_violations must be >= 1");
  }
}

std::size_t separation_threads() {
  if (const char* env = std::getenv("RATCP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<LatticeVector> find_violations(const SymMatrix& b, const SeparationConfig& cfg) {
  return find_below(b, Rational(1), cfg);
}

std::vector<LatticeVector> find_below(const SymMatrix& b, const Rational& threshold,
                                      const SeparationConfig& cfg) {
  const std::size_t n = b.dim();
  Integer scale = threshold.den();
  for (const auto& e : b.upper()) scale = lcm(scale, e.den());

  IntegerForm<Integer> exact{n, std::vector<Integer>(n * n),
                             Integer(threshold.num() * scale / threshold.den())};
  Integer max_entry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = b(i, j);
      exact.m[i * n + j] = e.num() * (scale / e.den());
      if (abs(exact.m[i * n + j]) > max_entry) max_entry = abs(exact.m[i * n + j]);
    }
  }

  // |v^T M v| <= max|M| (n R)^2, so int64 is exact when that stays below 2^62.
  const Integer reach = Integer(static_cast<unsigned long>(n * cfg.linf_bound()));
  if (fits_int64(max_entry * reach * reach) && fits_int64(exact.threshold)) {
    IntegerForm<std::int64_t> fast{n, std::vector<std::int64_t>(n * n), exact.threshold.get_si()};
    for (std::size_t k = 0; k < n * n; ++k) fast.m[k] = exact.m[k].get_si();
    return enumerate(n, cfg.linf_bound(), cfg.max_violations(),
                     [&fast](const Coords& v) { return fast.below(v); });
  }
  return enumerate(n, cfg.linf_bound(), cfg.max_violations(),
                   [&exact](const Coords& v) { return exact.below(v); });
}

std::vector<LatticeVector> primitive_vectors(std::size_t n, std::size_t linf_bound) {
  return enumerate(n, linf_bound, static_cast<std::size_t>(-1), [](const Coords&) { return true; });
}

DirichletResult::DirichletResult(std::vector<Integer> p, Integer q, Rational epsilon,
                                 const std::vector<Rational>& alphas)
    : p_(std::move(p)), q_(std::move(q)), epsilon_(std::move(epsilon)) {
  if (p_.size() != alphas.size()) throw std::logic_error("DirichletResult: length mismatch");
  if (q_ < 1) throw std::logic_error("DirichletResult: q < 1");
  // q <= eps^-n  <=>  q eps^n <= 1.
  Rational power(1);
  for (std::size_t i = 0; i < alphas.size(); ++i) power *= epsilon_;
  if (Rational(q_) * power > Rational(1)) throw std::logic_error("DirichletResult: q > eps^-n");
  const Rational bound = epsilon_ / Rational(q_);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if ((alphas[i] - Rational(p_[i], q_)).abs() > bound) {
      throw std::logic_error("DirichletResult: |alpha_i - p_i/q| > eps/q");
    }
  }
}

DirichletResult dirichlet(const std::vector<Rational>& alphas, const Rational& epsilon) {
  if (alphas.empty()) throw std::invalid_argument("dirichlet: no numbers to approximate");
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw std::invalid_argument("dirichlet: epsilon must lie in (0, 1)");
  }
  Rational power(1);
  for (std::size_t i = 0; i < alphas.size(); ++i) power *= epsilon.reciprocal();
  const Integer q_max = power.floor();

  std::vector<Integer> p(alphas.size());
  for (Integer q = 1; q <= q_max; ++q) {
    const Rational qr(q);
    bool ok = true;
    for (std::size_t i = 0; i < alphas.size() && ok; ++i) {
      const Rational scaled = qr * alphas[i];
      p[i] = scaled.round_nearest();
      ok = (scaled - Rational(p[i])).abs() <= epsilon;
    }
    if (ok) return DirichletResult(p, q, epsilon, alphas);
  }
  throw std::logic_error("dirichlet: no q <= eps^-n found");
}

Refutation refute_membership(const SymMatrix& b, const Vector& x, const Rational& epsilon) {
  if (x.size() != b.dim()) throw std::invalid_argument("refute_membership: dimension mismatch");
  for (const auto& xi : x) {
    if (xi.sign() <= 0) throw std::invalid_argument("refute_membership: x must be positive");
  }
  if (!quadratic_form(b, x).is_zero()) {
    throw std::invalid_argument("refute_membership: x^T B x is not zero");
  }
  const DirichletResult approx = dirichlet(x, epsilon);
  std::vector<Integer> p = approx.p();
  bool nonzero = false;
  for (auto& pi : p) {
    if (pi < 0) pi = 0;
    if (pi != 0) nonzero = true;
  }
  if (!nonzero) {
    throw std::invalid_argument("refute_membership: approximation rounds to zero; epsilon " +
                                epsilon.to_short_string() + " is too large");
  }
  LatticeVector v(std::move(p));
  Rational value = quadratic_form(b, v);
  return Refutation{std::move(v), approx.q(), std::move(value)};
}

}  // namespace ratcp
