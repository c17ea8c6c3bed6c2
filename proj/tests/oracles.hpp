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

// Slow reference implementations used only by tests. They work on raw
// mpq_class/mpz_class values and deliberately avoid the library's linear
// algebra, LP and enumeration code.

#ifndef RATCP_TESTS_ORACLES_HPP_
#define RATCP_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ratcp/lp.hpp"
#include "ratcp/sym_matrix.hpp"

namespace ratcp::oracle {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // row-major, rows x cols

inline QVec raw(const Vector& v) {
  QVec out;
  for (const auto& x : v) out.push_back(x.raw());
  return out;
}

// Rank by plain Gaussian elimination on a copy.
inline std::size_t rank(QMat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Solves the square system m x = b; nullopt when m is singular.
inline std::optional<QVec> solve_square(QMat m, QVec b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      b[i] -= f * b[c];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

inline mpq_class qdot(const QVec& a, const QVec& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Is target a nonnegative combination of gens? By Caratheodory it suffices
// to try linearly independent subsets.
inline bool in_cone(const QVec& target, const std::vector<QVec>& gens) {
  const std::size_t d = target.size();
  bool zero = true;
  for (const auto& t : target) zero &= t == 0;
  if (zero) return true;
  bool found = false;
  for (std::size_t k = 1; k <= std::min(d, gens.size()) && !found; ++k) {
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& s) {
      if (found) return;
      // Columns gens[s]; solve the normal equations, then check exactness.
      QMat cols(d, QVec(k));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) cols[i][j] = gens[s[j]][i];
      }
      QMat normal(k, QVec(k));
      QVec rhs(k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t i = 0; i < d; ++i) normal[a][b] += cols[i][a] * cols[i][b];
        }
        for (std::size_t i = 0; i < d; ++i) rhs[a] += cols[i][a] * target[i];
      }
      const auto mu = solve_square(normal, rhs);
      if (!mu) return;
      for (const auto& m : *mu) {
        if (m < 0) return;
      }
      for (std::size_t i = 0; i < d; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < k; ++j) s += cols[i][j] * (*mu)[j];
        if (s != target[i]) return;
      }
      found = true;
    });
  }
  return found;
}

enum class LpKind { kOptimal, kInfeasible, kUnbounded };

struct LpAnswer {
  LpKind kind;
  mpq_class value;  // meaningful for kOptimal
};

// min c.y s.t. g_i.y >= h_i, for constraint matrices of full column rank
// (so the feasible region, if nonempty, has a vertex).
inline LpAnswer brute_force_lp(const LinearProgram& lp) {
  const std::size_t d = lp.dim();
  const QVec c = raw(lp.objective());
  std::vector<QVec> g;
  QVec h;
  for (const auto& con : lp.constraints()) {
    g.push_back(raw(con.g));
    h.push_back(con.h.raw());
  }
  std::optional<mpq_class> best;
  for_each_subset(g.size(), d, [&](const std::vector<std::size_t>& s) {
    QMat m;
    QVec b;
    for (auto i : s) {
      m.push_back(g[i]);
      b.push_back(h[i]);
    }
    const auto y = solve_square(m, b);
    if (!y) return;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (qdot(g[i], *y) < h[i]) return;
    }
    const mpq_class v = qdot(c, *y);
    if (!best || v < *best) best = v;
  });
  if (!best) return {LpKind::kInfeasible, 0};
  // Bounded iff c lies in the cone of the constraint normals.
  if (!in_cone(c, g)) return {LpKind::kUnbounded, 0};
  return {LpKind::kOptimal, *best};
}

// v^T B v by explicit double summation over the full square.
inline mpq_class quad(const SymMatrix& b, const std::vector<long>& v) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) s += b(i, j).raw() * v[i] * v[j];
  }
  return s;
}

// Every primitive v in [0, R]^n with v^T B v < threshold, as an ordered set.
// Walks the full box (including non-primitive points) with an odometer.
inline std::set<std::vector<long>> exhaustive_below(const SymMatrix& b, long r,
                                                    const mpq_class& threshold) {
  const std::size_t n = b.dim();
  std::set<std::vector<long>> out;
  std::vector<long> v(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && v[i] == r) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g != 1) continue;
    if (quad(b, v) < threshold) out.insert(v);
  }
  return out;
}

inline std::vector<long> to_longs(const LatticeVector& v) {
  std::vector<long> out;
  for (const auto& c : v.coords()) out.push_back(c.get_si());
  return out;
}

// Independent accumulation of sum alpha_i v_i v_i^T, as a full n x n array.
inline QMat sum_rank_ones(std::size_t n, const std::vector<mpq_class>& alphas,
                          const std::vector<std::vector<long>>& vs) {
  QMat s(n, QVec(n));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s[i][j] += alphas[k] * vs[k][i] * vs[k][j];
    }
  }
  return s;
}

inline QMat full(const SymMatrix& a) {
  QMat m(a.dim(), QVec(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a(i, j).raw();
  }
  return m;
}

// Positive semidefiniteness via the LDL^T pivots, with the zero-pivot rule
// that a zero diagonal forces a zero row.
inline bool is_psd(const SymMatrix& a) {
  QMat m = full(a);
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] < 0) return false;
    if (m[k][k] == 0) {
      for (std::size_t j = k; j < n; ++j) {
        if (m[k][j] != 0) return false;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

// Small rational in [-bound, bound] with denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, long bound, long den) {
  std::uniform_int_distribution<long> q(1, den);
  const long d = q(rng);
  std::uniform_int_distribution<long> p(-bound * d, bound * d);
  return Rational(Integer(p(rng)), Integer(d));
}

inline SymMatrix random_sym(std::mt19937_64& rng, std::size_t n, long bound, long den) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, random_rational(rng, bound, den));
  }
  return a;
}

// Random LP with integer data and a full-column-rank constraint matrix.
inline LinearProgram random_lp(std::mt19937_64& rng, std::size_t d, std::size_t m) {
  std::uniform_int_distribution<long> coef(-3, 3);
  for (;;) {
    std::vector<Constraint> cons;
    std::set<std::vector<long>> seen;
    QMat rows;
    while (cons.size() < m) {
      std::vector<long> g(d);
      const long h = coef(rng);
      for (auto& x : g) x = coef(rng);
      std::vector<long> key = g;
      key.push_back(h);
      if (!seen.insert(key).second) continue;
      Vector gv;
      QVec gq;
      for (long x : g) {
        gv.emplace_back(x);
        gq.emplace_back(x);
      }
      rows.push_back(gq);
      cons.push_back({gv, Rational(h)});
    }
    if (rank(rows) < d) continue;
    Vector c;
    for (std::size_t i = 0; i < d; ++i) c.emplace_back(coef(rng));
    return LinearProgram(d, c, cons);
  }
}

}  // namespace ratcp::oracle

#endif  // RATCP_TESTS_ORACLES_HPP_
