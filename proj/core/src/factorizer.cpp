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

#include "ratcp/factorizer.hpp"

#include <set>
#include <stdexcept>

#include "ratcp/lattice.hpp"
#include "ratcp/linear_algebra.hpp"
#include "ratcp/verify.hpp"

namespace ratcp {
namespace {

std::vector<Vector> atom_coordinates(const std::vector<LatticeVector>& atoms) {
  std::vector<Vector> out;
  out.reserve(atoms.size());
  for (const auto& v : atoms) out.push_back(svec(rank_one(v)));
  return out;
}

SymMatrix combine(const std::vector<LatticeVector>& atoms, const std::vector<Rational>& coeffs,
                  std::size_t n) {
  SymMatrix sum(n);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!coeffs[i].is_zero()) sum += coeffs[i] * rank_one(atoms[i]);
  }
  return sum;
}

// The constraint set V of the cutting-plane loop, in insertion order.
class AtomPool {
 public:
  bool add(const LatticeVector& v) {
    if (!seen_.insert(v).second) return false;
    atoms_.push_back(v);
    return true;
  }
  const std::vector<LatticeVector>& atoms() const { return atoms_; }

 private:
  std::vector<LatticeVector> atoms_;
  std::set<LatticeVector> seen_;
};

// minimize <A, B>  s.t.  <B, v v^T> >= 1 (v in V),  <A, B> <= lambda,
// in svec(B) coordinates.
LinearProgram cutting_plane_lp(const SymMatrix& a, const Rational& lambda, const AtomPool& pool) {
  const Vector objective = svec_weighted(a);
  std::vector<Constraint> cons;
  cons.reserve(pool.atoms().size() + 1);
  for (const auto& v : pool.atoms()) cons.push_back({svec_weighted(rank_one(v)), Rational(1)});
  Vector upper = objective;
  for (auto& e : upper) e = -e;
  cons.push_back({std::move(upper), -lambda});
  return LinearProgram(svec_dim(a.dim()), objective, std::move(cons));
}

}  // namespace

void FactorizeConfig::validate() const {
  if (initial_r < 1) throw std::invalid_argument("FactorizeConfig: initial_R must be >= 1");
  if (initial_r > max_r) throw std::invalid_argument("FactorizeConfig: initial_R > max_R");
  if (lambda_policy < Rational(1)) {
    throw std::invalid_argument("FactorizeConfig: lambda multiplier must be >= 1");
  }
  if (max_rounds < 1) throw std::invalid_argument("FactorizeConfig: max_rounds must be >= 1");
  if (cuts_per_round < 1) {
    throw std::invalid_argument("FactorizeConfig: cuts_per_round must be >= 1");
  }
}

Rational choose_lambda(const SymMatrix& a, const FactorizeConfig& cfg) {
  const Rational trace = a.trace();
  if (trace.sign() <= 0) {
    throw std::invalid_argument("choose_lambda: trace(A) = " + trace.to_short_string() +
                                " is not positive");
  }
  return cfg.lambda_policy * trace;
}

std::optional<Rational> max_feasible_step(const SymMatrix& b, const SymMatrix& c,
                                          const std::vector<LatticeVector>& constraints) {
  std::optional<Rational> step;
  for (const auto& v : constraints) {
    const Rational slope = quadratic_form(c, v);
    if (slope.sign() >= 0) continue;
    const Rational limit = (quadratic_form(b, v) - Rational(1)) / -slope;
    if (!step || limit < *step) step = limit;
  }
  return step;
}

Combination caratheodory_reduce(const std::vector<LatticeVector>& atoms,
                                const std::vector<Rational>& coefficients, const SymMatrix& a) {
  if (atoms.size() != coefficients.size()) {
    throw std::invalid_argument("caratheodory_reduce: atoms and coefficients differ in length");
  }
  for (const auto& v : atoms) {
    if (v.size() != a.dim()) throw std::invalid_argument("caratheodory_reduce: dimension mismatch");
  }
  for (const auto& mu : coefficients) {
    if (mu.sign() < 0) throw std::invalid_argument("caratheodory_reduce: negative coefficient");
  }
  if (combine(atoms, coefficients, a.dim()) != a) {
    throw std::invalid_argument("caratheodory_reduce: combination does not reproduce A");
  }

  Combination cur;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    cur.atoms.push_back(atoms[i]);
    cur.coefficients.push_back(coefficients[i]);
  }

  for (;;) {
    auto beta = linear_dependency(atom_coordinates(cur.atoms));
    if (!beta) break;
    bool has_positive = false;
    for (const auto& b : *beta) has_positive |= b.sign() > 0;
    if (!has_positive) {
      for (auto& b : *beta) b = -b;
    }
    std::optional<Rational> t;
    for (std::size_t i = 0; i < beta->size(); ++i) {
      if ((*beta)[i].sign() <= 0) continue;
      const Rational ratio = cur.coefficients[i] / (*beta)[i];
      if (!t || ratio < *t) t = ratio;
    }
    Combination next;
    for (std::size_t i = 0; i < cur.atoms.size(); ++i) {
      Rational mu = cur.coefficients[i] - *t * (*beta)[i];
      if (mu.is_zero()) continue;
      next.atoms.push_back(cur.atoms[i]);
      next.coefficients.push_back(std::move(mu));
    }
    cur = std::move(next);
  }

  if (combine(cur.atoms, cur.coefficients, a.dim()) != a) {
    throw std::logic_error("caratheodory_reduce: reduction changed the sum");
  }
  return cur;
}

std::vector<Rational> solve_coefficients(const std::vector<LatticeVector>& atoms,
                                         const SymMatrix& a) {
  const auto columns = atom_coordinates(atoms);
  auto solved = solve_linear_system(Matrix::from_columns(columns, svec_dim(a.dim())), svec(a));
  auto* unique = std::get_if<Unique>(&solved);
  if (unique == nullptr) {
    throw std::logic_error(std::holds_alternative<NoSolution>(solved)
                               ? "solve_coefficients: A is not in the span of the atoms"
                               : "solve_coefficients: atoms are linearly dependent");
  }
  for (const auto& alpha : unique->x) {
    if (alpha.sign() < 0) throw std::logic_error("solve_coefficients: negative coefficient");
  }
  return unique->x;
}

FactorizeOutcome factorize(const SymMatrix& a, const FactorizeConfig& cfg) {
  cfg.validate();
  const std::size_t n = a.dim();
  FactorizeStats stats;
  stats.lambda = choose_lambda(a, cfg);
  std::size_t r = cfg.initial_r;

  AtomPool pool;
  for (auto& v : primitive_vectors(n, r)) pool.add(v);

  const Vector target = svec(a);
  std::optional<SymMatrix> current;
  bool need_lp = true;

  for (stats.rounds = 1; stats.rounds <= cfg.max_rounds; ++stats.rounds) {
    stats.final_r = r;
    stats.constraints = pool.atoms().size() + 1;
    if (need_lp) {
      const LpResult res = solve_min(cutting_plane_lp(a, stats.lambda, pool));
      ++stats.lp_solves;
      if (std::holds_alternative<Infeasible>(res)) {
        throw std::logic_error("factorize: LP infeasible although the identity is feasible");
      }
      if (std::holds_alternative<Unbounded>(res)) {
        // A is outside cone{v v^T : v in V}; D is a recession direction.
        const auto cm = cone_membership(target, atom_coordinates(pool.atoms()));
        const auto* sep = std::get_if<Separated>(&cm);
        if (sep == nullptr) throw std::logic_error("factorize: unbounded LP but A in cone(V)");
        const SymMatrix ray = unsvec_weighted(sep->witness, n);
        std::vector<LatticeVector> cuts;
        for (;;) {
          ++stats.separation_rounds;
          cuts = find_below(ray, Rational(0), SeparationConfig(r, cfg.cuts_per_round));
          if (!cuts.empty() || r == cfg.max_r) break;
          ++r;
        }
        stats.final_r = r;
        if (cuts.empty()) {
          return NotInteriorSuspected{
              ray,
              "LP relaxation unbounded along D with <A,D> < 0 and v^T D v >= 0 for all "
              "primitive v with |v|_inf <= " +
                  std::to_string(r),
              stats};
        }
        for (const auto& v : cuts) pool.add(v);
        continue;
      }
      const BasicSolution& sol = std::get<Optimal>(res).solution;
      stats.lp_iterations += sol.pivots;
      if (!stats.lp_values.empty() && sol.objective_value < stats.lp_values.back()) {
        throw std::logic_error("factorize: LP value decreased after adding cuts");
      }
      stats.lp_values.push_back(sol.objective_value);
      current = unsvec(sol.point, n);
    }
    const SymMatrix& b = *current;

    std::vector<LatticeVector> violations;
    for (;;) {
      ++stats.separation_rounds;
      violations = find_violations(b, SeparationConfig(r, cfg.cuts_per_round));
      if (!violations.empty() || r == cfg.max_r) break;
      ++r;
    }
    stats.final_r = r;
    if (!violations.empty()) {
      for (const auto& v : violations) pool.add(v);
      need_lp = true;
      continue;
    }

    // B is separation-clean up to max_R: collect the tight atoms.
    std::vector<LatticeVector> active;
    for (const auto& v : pool.atoms()) {
      if (quadratic_form(b, v) == Rational(1)) active.push_back(v);
    }
    const auto cm = cone_membership(target, atom_coordinates(active));
    if (const auto* in = std::get_if<InCone>(&cm)) {
      const Combination reduced = caratheodory_reduce(active, in->coefficients, a);
      const std::vector<Rational> alphas = solve_coefficients(reduced.atoms, a);
      Certificate cert;
      cert.n = n;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        cert.atoms.push_back({alphas[i], reduced.atoms[i]});
      }
      cert.meta = {stats.lambda, stats.final_r, stats.lp_iterations, stats.separation_rounds};
      if (const Verdict verdict = verify_certificate(a, cert); !verdict) {
        throw std::logic_error("factorize: produced an invalid certificate (" + verdict.reason +
                               ")");
      }
      return Success{std::move(cert), std::move(stats)};
    }

    // A is not in the cone of the tight atoms: move along the separating
    // direction, which lowers <A, B> while keeping every cut satisfied.
    const SymMatrix dir = unsvec_weighted(std::get<Separated>(cm).witness, n);
    const auto step = max_feasible_step(b, dir, pool.atoms());
    if (!step) {
      return NotInteriorSuspected{dir, "separating direction is unconstrained by every cut", stats};
    }
    SymMatrix moved = b + *step * dir;
    if (!(inner_product(a, moved) < inner_product(a, b))) {
      throw std::logic_error("factorize: separating step did not decrease <A, B>");
    }
    current = std::move(moved);
    need_lp = false;
  }
  stats.rounds = cfg.max_rounds;
  return BoundExceeded{r, current, stats};
}

}  // namespace ratcp
