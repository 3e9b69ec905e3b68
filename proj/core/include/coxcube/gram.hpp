#pragma once

#include <map>
#include <optional>

#include "coxcube/matrix.hpp"
#include "coxcube/polynomial.hpp"
#include "coxcube/univariate.hpp"

namespace coxcube {

/// The doubled symbolic Gram matrix 2G of a potential matrix: integer
/// entries 2, 0, -1, -t_m, -z_{i,j}, 2x_i per the label dictionary, so all
/// determinant conditions have integer coefficients.
struct SymbolicGram {
  int n = 0;
  VarSet vars;
  std::vector<std::vector<Polynomial>> doubled;  // (2n) x (2n)
};

/// Variable constraints and defining equations attached to one system.
struct GramSystem {
  int n = 0;
  VarSet vars;
  SymbolicGram gram;
  std::vector<Polynomial> conditions;    // deduped det(2G^S) + defining equations
  std::vector<Polynomial> determinants;  // just the deduped determinant conditions
  std::vector<Polynomial> t_equations;   // defining equations of t variables
  int raw_subset_count = 0;              // C(2n, n+2)
  int distinct_determinants = 0;         // after proportional dedup
  int pair_touching_count = 0;           // subsets meeting every opposite pair
};

/// Build 2G for a fully determined potential matrix. seven_substitution
/// maps a seven-pair (facet indices, 0-based) to a concrete label m >= 7,
/// replacing the z variable by a t_m variable with defining polynomial
/// D_m + 2 (cross-check mode).
SymbolicGram build_gram(const CoxMatrix& m, int n,
                        const std::map<std::pair<int, int>, int>* seven_substitution = nullptr);

/// Exact determinant of a square matrix of polynomials: cofactor expansion
/// for size <= 4, fraction-free Bareiss elimination above.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& a, const TermOrder& order);

/// All det(2G^S) = 0 conditions for |S| = n+2 plus the defining t-equations,
/// deduplicated up to nonzero rational multiples.
GramSystem generate_conditions(const SymbolicGram& gram);

/// Exact division f / g in the polynomial ring; throws if not divisible.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Default monomial order for a Gram system: t variables most significant,
/// then z, then x descending, so lex elimination ends in x1.
TermOrder default_order(const VarSet& vars, OrderKind kind);

}  // namespace coxcube
