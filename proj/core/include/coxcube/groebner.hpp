#pragma once

#include <cstdint>
#include <span>

#include "coxcube/polynomial.hpp"

namespace coxcube {

/// S(f,g) = (L/lt f) f - (L/lt g) g with L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Remainder of multivariate division of f by G: no term of the result is
/// divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const TermOrder& order);

/// Division with quotient tracking: f = sum quotients[i]*G[i] + remainder.
Polynomial normal_form_with_quotients(const Polynomial& f, std::span<const Polynomial> G,
                                      const TermOrder& order,
                                      std::vector<Polynomial>* quotients);

enum class GBStatus { Success, TimedOut };

struct GBResult {
  GBStatus status = GBStatus::Success;
  /// Reduced Groebner basis: monic elements, no term divisible by another
  /// element's leading monomial, sorted by leading monomial ascending.
  std::vector<Polynomial> basis;
  double elapsed_s = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t queue_peak = 0;

  bool is_unit_ideal() const {
    return status == GBStatus::Success && basis.size() == 1 && basis[0].is_constant() &&
           !basis[0].is_zero();
  }
};

/// Buchberger with the normal selection strategy (minimal lcm degree
/// first), coprime and chain criteria, and a cooperative wall-clock budget
/// (budget_s < 0 means unlimited). Deterministic for a fixed order.
GBResult buchberger(std::span<const Polynomial> F, const TermOrder& order,
                    double budget_s = -1);

// --- triviality ladder -------------------------------------------------------

struct LadderRung {
  std::vector<int> deferred_slots;  // variable slots excluded in the first phase
  double budget_s = 5;
};

enum class Triviality { Trivial, NonTrivial, Exhausted };

struct TrivialityResult {
  Triviality verdict = Triviality::Exhausted;
  GBResult gb;        // the successful basis for NonTrivial
  int rung_used = -1;
  double elapsed_s = 0;
};

/// Runs buchberger per rung: first on the subset of F not involving the
/// rung's deferred variables, then completes with the remaining generators.
/// Returns at the first rung that finishes inside its budget.
TrivialityResult is_trivial_ideal(std::span<const Polynomial> F, const TermOrder& order,
                                  std::span<const LadderRung> ladder);

/// The default rung schedule for a system over `vars`: a plain pass, then
/// passes deferring (t5,x1), (t4,x2), then every remaining (t_m, x_i)
/// combination present, then an unrestricted long pass.
std::vector<LadderRung> default_ladder(const VarSet& vars, std::span<const double> budgets);

}  // namespace coxcube
