#pragma once

#include <vector>

#include "coxcube/interval.hpp"
#include "coxcube/polynomial.hpp"

namespace coxcube {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// The zero polynomial has no coefficients.
struct QPoly {
  std::vector<Rational> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  static QPoly from(std::vector<Rational> coeffs);
  static QPoly x();
  static QPoly constant(Rational v);
};

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rational& s);
QPoly qp_derivative(const QPoly& a);
/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
/// Monic gcd.
QPoly qp_gcd(QPoly a, QPoly b);
/// p / gcd(p, p'), monic.
QPoly qp_squarefree(const QPoly& p);
QPoly qp_monic(const QPoly& p);

Rational qp_eval(const QPoly& p, const Rational& x);
QInterval qp_eval(const QPoly& p, const QInterval& x);
bool qp_is_root(const QPoly& p, const Rational& x);

/// An isolating interval for one real root of a squarefree polynomial;
/// `multiple` is set from the original polynomial when it had repeated
/// roots.
struct IsolatedRoot {
  QInterval box;
  bool multiple = false;
};

/// Disjoint isolating intervals for all real roots, ascending. The input
/// need not be squarefree; isolation runs on the squarefree part and the
/// multiplicity flag records roots shared with gcd(p, p').
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p);

/// Shrink an isolating interval of a squarefree polynomial below the given
/// width by sign bisection; exact rational roots collapse to points.
QInterval refine_root(const QPoly& squarefree, QInterval box, const Rational& width);

/// Number of real roots in (a, b] by Sturm's theorem (p squarefree or not).
int sturm_count(const QPoly& p, const Rational& a, const Rational& b);

/// D_m(z) + 2 where D is the Dickson recurrence D_{k+1} = z D_k - D_{k-1},
/// D_0 = 2, D_1 = z; its largest real root is 2cos(pi/m).
QPoly dickson_plus_two(int m);

/// Certified enclosure of 2cos(pi/m), width <= 2^-frac_bits.
QInterval two_cos_pi_over(int m, unsigned frac_bits);

/// The squarefree defining polynomial of 2cos(pi/m) used by the solver.
QPoly two_cos_defining_poly(int m);

/// View a multivariate polynomial involving only variable slot `slot` as
/// univariate; throws if other slots occur.
QPoly univariate_in(const Polynomial& f, int slot);

/// Lift a univariate polynomial into the multivariate ring at `slot`.
Polynomial multivariate_from(const QPoly& p, int slot, const TermOrder& order);

}  // namespace coxcube
