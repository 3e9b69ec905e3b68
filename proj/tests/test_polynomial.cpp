#include <random>

#include "coxcube/polynomial.hpp"
#include "coxcube/univariate.hpp"
#include "doctest.h"

using namespace coxcube;

namespace {

VarSet xy_vars() {
  VarSet v;
  v.vars = {Variable::x(1), Variable::x(2)};
  return v;
}

Polynomial rand_poly(std::mt19937& rng, const TermOrder& order, int nvars, int max_terms) {
  Polynomial p;
  int nterms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m.e[v] = static_cast<std::uint8_t>(rng() % 4);
    long num = static_cast<long>(rng() % 21) - 10;
    long den = 1 + static_cast<long>(rng() % 6);
    Rational c(num, den);
    c.canonicalize();
    if (num) p.terms.push_back({m, c});
  }
  normalize(p, order);
  return p;
}

}  // namespace

TEST_CASE("variable names round-trip") {
  for (const Variable& v :
       {Variable::x(3), Variable::z(1, 4), Variable::t(5), Variable::t(11)})
    CHECK(variable_from_name(v.name()) == v);
}

TEST_CASE("polynomial arithmetic basics") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);

  Polynomial f = parse_polynomial("x1^2 + 2*x1*x2 - 1/2", vars, lex);
  CHECK(add(f, Polynomial::zero(), lex) == f);

  // (x - y)(x + y) = x^2 - y^2
  Polynomial d = parse_polynomial("x1 - x2", vars, lex);
  Polynomial s = parse_polynomial("x1 + x2", vars, lex);
  CHECK(mul(d, s, lex) == parse_polynomial("x1^2 - x2^2", vars, lex));

  // (t4^2 - 2) * 1
  VarSet tv;
  tv.vars = {Variable::t(4)};
  TermOrder tlex = TermOrder::lex(1);
  Polynomial teq = parse_polynomial("t4^2 - 2", tv, tlex);
  CHECK(mul(teq, Polynomial::constant(1), tlex) == teq);

  CHECK(to_string(sub(f, f, lex), vars) == "0");
}

TEST_CASE("ring axioms hold exactly on random triples") {
  VarSet vars = xy_vars();
  std::mt19937 rng(42);
  for (OrderKind kind : {OrderKind::Lex, OrderKind::GrevLex}) {
    TermOrder order{kind, {0, 1}};
    for (int trial = 0; trial < 60; ++trial) {
      Polynomial a = rand_poly(rng, order, 2, 5);
      Polynomial b = rand_poly(rng, order, 2, 5);
      Polynomial c = rand_poly(rng, order, 2, 5);
      CHECK(add(a, b, order) == add(b, a, order));
      CHECK(mul(a, b, order) == mul(b, a, order));
      CHECK(mul(mul(a, b, order), c, order) == mul(a, mul(b, c, order), order));
      CHECK(mul(a, add(b, c, order), order) ==
            add(mul(a, b, order), mul(a, c, order), order));
      CHECK(add(a, sub(b, a, order), order) == b);
    }
  }
}

TEST_CASE("term orders") {
  TermOrder lex = TermOrder::lex(2);
  TermOrder grevlex = TermOrder::grevlex(2);
  Monomial x = Monomial::var(0), y = Monomial::var(1);
  Monomial x2 = Monomial::var(0, 2), y3 = Monomial::var(1, 3);

  CHECK(lex.less(y, x));
  CHECK(lex.less(y3, x));           // lex ignores degree
  CHECK(grevlex.less(x, y3));       // grevlex grades first
  CHECK(grevlex.less(y3, x2 * y));  // equal handled by reverse lex
  CHECK(lex.compare(x, x) == std::strong_ordering::equal);

  // 1 is minimal in both
  CHECK(lex.less(Monomial{}, y));
  CHECK(grevlex.less(Monomial{}, y));

  // priority reversal flips lex
  TermOrder lex_rev{OrderKind::Lex, {1, 0}};
  CHECK(lex_rev.less(x, y));

  // with_last demotes the chosen slot
  TermOrder demoted = lex.with_last(std::vector<int>{0});
  CHECK(demoted.less(x, y));
}

TEST_CASE("monomial helpers") {
  Monomial a = Monomial::var(0, 2) * Monomial::var(1);
  Monomial b = Monomial::var(1, 2);
  Monomial l = Monomial::lcm(a, b);
  CHECK(l.e[0] == 2);
  CHECK(l.e[1] == 2);
  CHECK(!Monomial::coprime(a, b));
  CHECK(Monomial::coprime(Monomial::var(0), Monomial::var(1)));
  CHECK(b.divides(l));
  CHECK((l / b) == Monomial::var(0, 2));
}

TEST_CASE("primitive and proportional") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);
  Polynomial f = parse_polynomial("2/3*x1^2 - 4/3*x2", vars, lex);
  Polynomial p = make_primitive(f);
  CHECK(p == parse_polynomial("x1^2 - 2*x2", vars, lex));
  CHECK(proportional(f, p));
  CHECK(!proportional(f, parse_polynomial("x1^2 + 2*x2", vars, lex)));
  CHECK(make_primitive(scale(f, Rational(-1))) == p);  // positive leading coefficient
}

TEST_CASE("evaluation: rational and interval agree") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = rand_poly(rng, lex, 2, 6);
    std::vector<Rational> pt{Rational(static_cast<long>(rng() % 7) - 3) / 2,
                             Rational(static_cast<long>(rng() % 7) - 3) / 3};
    pt.resize(Monomial::kMaxVars, Rational(0));
    Rational exact = evaluate(f, pt);
    std::vector<QInterval> box;
    for (const auto& q : pt) box.emplace_back(q);
    QInterval iv = evaluate(f, box);
    CHECK(iv.contains(exact));
    CHECK(iv.lo == iv.hi);
  }
}

TEST_CASE("parser and printer round-trip") {
  VarSet vars;
  vars.vars = {Variable::x(1), Variable::x(2), Variable::z(1, 4), Variable::t(4)};
  TermOrder order = TermOrder::grevlex(4);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = rand_poly(rng, order, 4, 6);
    CHECK(parse_polynomial(to_string(f, vars), vars, order) == f);
  }
  CHECK(parse_polynomial("0", vars, order).is_zero());
  CHECK_THROWS_AS((void)parse_polynomial("x9", vars, order), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 3), 6) == "0.333333");
  CHECK(to_decimal(Rational(1, 3), 6, true) == "0.333334");
  CHECK(to_decimal(Rational(-1, 2), 4) == "-0.5000");
  CHECK(to_decimal(Rational(3), 2) == "3.00");
}

TEST_CASE("interval arithmetic") {
  QInterval a{Rational(1, 2), Rational(1)};
  QInterval b{Rational(-2), Rational(-1)};
  CHECK((a * b).lo == Rational(-2));
  CHECK((a * b).hi == Rational(-1, 2));
  CHECK((a + b).contains(Rational(-1)));
  CHECK((-a).hi == Rational(-1, 2));
  CHECK(!a.contains_zero());
  CHECK((a - a).contains_zero());
  CHECK_THROWS_AS((void)(a / QInterval{Rational(-1), Rational(1)}), std::domain_error);

  QInterval s = sqrt_enclosure(Rational(2), 40);
  CHECK(s.width() <= Rational(1, mpz_class(mpz_class(1) << 40)));
  CHECK(sign(s.lo * s.lo - 2) <= 0);
  CHECK(sign(s.hi * s.hi - 2) >= 0);
}

TEST_CASE("univariate: division, gcd, squarefree") {
  // (x-1)^2 (x+2)
  QPoly p = qp_mul(qp_mul(QPoly::from({Rational(-1), Rational(1)}),
                          QPoly::from({Rational(-1), Rational(1)})),
                   QPoly::from({Rational(2), Rational(1)}));
  auto [q, r] = qp_divmod(p, QPoly::from({Rational(-1), Rational(1)}));
  CHECK(r.is_zero());
  CHECK(q.degree() == 2);

  QPoly sf = qp_squarefree(p);
  CHECK(sf.degree() == 2);
  CHECK(qp_is_root(sf, Rational(1)));
  CHECK(qp_is_root(sf, Rational(-2)));

  QPoly g = qp_gcd(p, qp_derivative(p));
  CHECK(g.degree() == 1);
  CHECK(qp_is_root(g, Rational(1)));
}

TEST_CASE("univariate: root isolation and refinement") {
  // x^2 - 2: roots +-sqrt2
  QPoly p = QPoly::from({Rational(-2), Rational(0), Rational(1)});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(!roots[0].multiple);
  QInterval pos = refine_root(p, roots[1].box, Rational(1, 1000000));
  QInterval s2 = sqrt_enclosure(Rational(2), 30);
  CHECK(pos.intersects(s2));

  // (x-1)^2 (x+2): multiple root at 1
  QPoly m = qp_mul(qp_mul(QPoly::from({Rational(-1), Rational(1)}),
                          QPoly::from({Rational(-1), Rational(1)})),
                   QPoly::from({Rational(2), Rational(1)}));
  auto mroots = isolate_real_roots(m);
  REQUIRE(mroots.size() == 2);
  CHECK(mroots[0].box.contains(Rational(-2)));
  CHECK(!mroots[0].multiple);
  CHECK(mroots[1].box.contains(Rational(1)));
  CHECK(mroots[1].multiple);

  // dense rational roots
  QPoly dense = qp_mul(qp_mul(QPoly::from({Rational(0), Rational(1)}),
                              QPoly::from({Rational(-1, 100), Rational(1)})),
                       QPoly::from({Rational(1, 100), Rational(1)}));
  auto droots = isolate_real_roots(dense);
  CHECK(droots.size() == 3);

  CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
}

TEST_CASE("two cos pi over m") {
  // 2cos(pi/2) = 0, 2cos(pi/3) = 1, 2cos(pi/4) = sqrt2, 2cos(pi/6) = sqrt3
  CHECK(two_cos_pi_over(2, 20).contains(Rational(0)));
  CHECK(two_cos_pi_over(3, 20).contains(Rational(1)));
  CHECK(two_cos_pi_over(4, 40).intersects(sqrt_enclosure(Rational(2), 40)));
  CHECK(two_cos_pi_over(6, 40).intersects(sqrt_enclosure(Rational(3), 40)));
  // 2cos(pi/5) = golden ratio
  QInterval phi = two_cos_pi_over(5, 40);
  QInterval s5 = sqrt_enclosure(Rational(5), 42);
  CHECK(phi.contains_zero() == false);
  CHECK(phi.intersects({(s5.lo + 1) / 2, (s5.hi + 1) / 2}));
  // 2cos(pi/7) ~ 1.8019377
  QInterval c7 = two_cos_pi_over(7, 40);
  CHECK(c7.lo > Rational(18019, 10000));
  CHECK(c7.hi < Rational(18020, 10000));
  // monotone in m, approaching 2
  QInterval c1000 = two_cos_pi_over(1000, 20);
  CHECK(c1000.lo > Rational(19999, 10000));
  CHECK(c1000.hi < Rational(2));
}

TEST_CASE("structural squarefree part of the dickson polynomials") {
  for (int m = 2; m <= 25; ++m) {
    QPoly structural = two_cos_defining_poly(m);
    QPoly via_gcd = qp_squarefree(dickson_plus_two(m));
    CHECK(qp_sub(structural, via_gcd).is_zero());
  }
}

TEST_CASE("univariate/multivariate conversion") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);
  Polynomial f = parse_polynomial("x2^3 - 2*x2 + 1", vars, lex);
  QPoly p = univariate_in(f, 1);
  CHECK(p.degree() == 3);
  CHECK(multivariate_from(p, 1, lex) == f);
  Polynomial g = parse_polynomial("x1*x2", vars, lex);
  CHECK_THROWS_AS((void)univariate_in(g, 1), std::invalid_argument);
}
