#include <random>

#include "coxcube/groebner.hpp"
#include "doctest.h"

using namespace coxcube;

namespace {

VarSet xy_vars() {
  VarSet v;
  v.vars = {Variable::x(1), Variable::x(2)};
  return v;
}

Polynomial rand_poly(std::mt19937& rng, const TermOrder& order, int nvars) {
  Polynomial p;
  int nterms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m.e[v] = static_cast<std::uint8_t>(rng() % 3);
    long num = static_cast<long>(rng() % 9) - 4;
    if (num) p.terms.push_back({m, Rational(num)});
  }
  normalize(p, order);
  return p;
}

bool in_basis(const GBResult& g, const Polynomial& f, const TermOrder& order) {
  return normal_form(f, g.basis, order).is_zero();
}

}  // namespace

TEST_CASE("s-polynomial") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);

  Polynomial f = parse_polynomial("x1^2 + x2^2", vars, lex);
  CHECK(s_polynomial(f, f, lex).is_zero());

  // f = x^2 + y^2, g = x - y: S = y*x + y^2 after cancelling x^2
  Polynomial g = parse_polynomial("x1 - x2", vars, lex);
  Polynomial s = s_polynomial(f, g, lex);
  CHECK(s == parse_polynomial("x1*x2 + x2^2", vars, lex));

  CHECK_THROWS_AS((void)s_polynomial(f, Polynomial::zero(), lex), std::invalid_argument);

  // coprime leading monomials: S-poly reduces to zero modulo {f2, g2}
  Polynomial f2 = parse_polynomial("x1^2 + 1", vars, lex);
  Polynomial g2 = parse_polynomial("x2^2 - 2", vars, lex);
  std::vector<Polynomial> fg{f2, g2};
  CHECK(normal_form(s_polynomial(f2, g2, lex), fg, lex).is_zero());
}

TEST_CASE("normal form") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);

  Polynomial g = parse_polynomial("x1 - x2", vars, lex);
  std::vector<Polynomial> G{g};
  CHECK(normal_form(g, G, lex).is_zero());
  CHECK(normal_form(parse_polynomial("x1^2", vars, lex), G, lex) ==
        parse_polynomial("x2^2", vars, lex));

  std::vector<Polynomial> unit{Polynomial::constant(1)};
  CHECK(normal_form(parse_polynomial("x1^3 - 7*x2", vars, lex), unit, lex).is_zero());
}

TEST_CASE("division recombination reproduces the input") {
  VarSet vars = xy_vars();
  std::mt19937 rng(31);
  for (OrderKind kind : {OrderKind::Lex, OrderKind::GrevLex}) {
    TermOrder order{kind, {0, 1}};
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = rand_poly(rng, order, 2);
      std::vector<Polynomial> G;
      for (int i = 0; i < 2; ++i) {
        Polynomial g = rand_poly(rng, order, 2);
        if (!g.is_zero()) G.push_back(g);
      }
      if (G.empty()) continue;
      std::vector<Polynomial> quot;
      Polynomial r = normal_form_with_quotients(f, G, order, &quot);
      Polynomial rebuilt = r;
      for (size_t i = 0; i < G.size(); ++i)
        rebuilt = add(rebuilt, mul(quot[i], G[i], order), order);
      CHECK(rebuilt == f);
      // no term of r divisible by any leading monomial
      for (const auto& t : r.terms)
        for (const auto& g : G) CHECK(!g.leading().mono.divides(t.mono));
    }
  }
}

TEST_CASE("buchberger on the hand-solved examples") {
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);

  auto unit = buchberger(std::vector<Polynomial>{Polynomial::constant(1)}, lex);
  CHECK(unit.is_unit_ideal());

  // {x^2 + y^2 - 1, x - y} -> {x - y, y^2 - 1/2}
  std::vector<Polynomial> F{parse_polynomial("x1^2 + x2^2 - 1", vars, lex),
                            parse_polynomial("x1 - x2", vars, lex)};
  auto g = buchberger(F, lex);
  REQUIRE(g.status == GBStatus::Success);
  REQUIRE(g.basis.size() == 2);
  CHECK(g.basis[0] == parse_polynomial("x2^2 - 1/2", vars, lex));
  CHECK(g.basis[1] == parse_polynomial("x1 - x2", vars, lex));
}

TEST_CASE("buchberger postconditions on random systems") {
  VarSet vars3;
  vars3.vars = {Variable::x(1), Variable::x(2), Variable::x(3)};
  std::mt19937 rng(77);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TermOrder order{trial % 2 ? OrderKind::Lex : OrderKind::GrevLex, {0, 1, 2}};
    std::vector<Polynomial> F;
    int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      Polynomial f = rand_poly(rng, order, 3);
      if (!f.is_zero()) F.push_back(f);
    }
    if (F.empty()) continue;
    auto g = buchberger(F, order, 30.0);
    REQUIRE(g.status == GBStatus::Success);
    if (!g.is_unit_ideal()) ++nontrivial;

    // every input reduces to zero
    for (const auto& f : F) CHECK(in_basis(g, f, order));
    // every S-polynomial reduces to zero
    for (size_t i = 0; i < g.basis.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        CHECK(normal_form(s_polynomial(g.basis[i], g.basis[j], order), g.basis, order)
                  .is_zero());
    // reduced: monic, no term divisible by another leading monomial
    for (size_t i = 0; i < g.basis.size(); ++i) {
      CHECK(g.basis[i].leading().coeff == 1);
      for (size_t j = 0; j < g.basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : g.basis[i].terms)
          CHECK(!g.basis[j].leading().mono.divides(t.mono));
      }
    }
  }
  CHECK(nontrivial > 20);  // the generator should produce real work
}

TEST_CASE("triviality is order independent") {
  VarSet vars3;
  vars3.vars = {Variable::x(1), Variable::x(2), Variable::x(3)};
  std::mt19937 rng(123);
  std::vector<std::vector<int>> priorities{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> F;
    TermOrder base = TermOrder::grevlex(3);
    for (int i = 0; i < 3; ++i) {
      Polynomial f = rand_poly(rng, base, 3);
      if (!f.is_zero()) F.push_back(f);
    }
    if (F.empty()) continue;
    int verdicts = 0;
    for (const auto& pri : priorities) {
      TermOrder order{OrderKind::GrevLex, pri};
      std::vector<Polynomial> Fo = F;
      for (auto& f : Fo) normalize(f, order);
      auto g = buchberger(Fo, order, 30.0);
      REQUIRE(g.status == GBStatus::Success);
      verdicts += g.is_unit_ideal() ? 1 : 0;
    }
    CHECK((verdicts == 0 || verdicts == 3));
  }
}

TEST_CASE("evaluation consistency on the variety") {
  // points on the variety of G satisfy f(p) == nf(f, G)(p)
  VarSet vars = xy_vars();
  TermOrder lex = TermOrder::lex(2);
  // G = GB of {x - 2, y - 3}; variety = {(2, 3)}
  std::vector<Polynomial> F{parse_polynomial("x1 - 2", vars, lex),
                            parse_polynomial("x2 - 3", vars, lex)};
  auto g = buchberger(F, lex);
  std::vector<Rational> pt(Monomial::kMaxVars, Rational(0));
  pt[0] = 2;
  pt[1] = 3;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = rand_poly(rng, lex, 2);
    CHECK(evaluate(f, pt) == evaluate(normal_form(f, g.basis, lex), pt));
  }
}

TEST_CASE("budget expiry is reported") {
  // cyclic-4-like system with an absurdly small budget
  VarSet v4;
  v4.vars = {Variable::x(1), Variable::x(2), Variable::x(3), Variable::x(4)};
  TermOrder order = TermOrder::grevlex(4);
  std::vector<Polynomial> F{
      parse_polynomial("x1 + x2 + x3 + x4", v4, order),
      parse_polynomial("x1*x2 + x2*x3 + x3*x4 + x4*x1", v4, order),
      parse_polynomial("x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2", v4, order),
      parse_polynomial("x1*x2*x3*x4 - 1", v4, order)};
  auto g = buchberger(F, order, 0.0);
  CHECK(g.status == GBStatus::TimedOut);
  CHECK(g.elapsed_s >= 0);

  auto full = buchberger(F, order, 60.0);
  CHECK(full.status == GBStatus::Success);
  CHECK(!full.is_unit_ideal());
}

TEST_CASE("triviality ladder") {
  VarSet vars;
  vars.vars = {Variable::x(1), Variable::x(2), Variable::t(5)};
  TermOrder order = TermOrder::grevlex(3);

  std::vector<LadderRung> ladder = default_ladder(vars, std::vector<double>{5, 10, 20, 60});
  CHECK(ladder.size() >= 3);
  CHECK(ladder.front().deferred_slots.empty());
  CHECK(ladder.back().deferred_slots.empty());

  std::vector<Polynomial> unit{parse_polynomial("x1 - 1", vars, order),
                               parse_polynomial("x1 - 2", vars, order)};
  auto r1 = is_trivial_ideal(unit, order, ladder);
  CHECK(r1.verdict == Triviality::Trivial);
  CHECK(r1.rung_used == 0);

  std::vector<Polynomial> nontrivial{parse_polynomial("t5^2 - t5 - 1", vars, order),
                                     parse_polynomial("x1 - t5", vars, order),
                                     parse_polynomial("x2 + t5", vars, order)};
  auto r2 = is_trivial_ideal(nontrivial, order, ladder);
  CHECK(r2.verdict == Triviality::NonTrivial);
  CHECK(!r2.gb.basis.empty());

  // zero-budget ladder exhausts on hard systems
  VarSet v4;
  v4.vars = {Variable::x(1), Variable::x(2), Variable::x(3), Variable::x(4)};
  TermOrder o4 = TermOrder::grevlex(4);
  std::vector<Polynomial> hard{
      parse_polynomial("x1 + x2 + x3 + x4", v4, o4),
      parse_polynomial("x1*x2 + x2*x3 + x3*x4 + x4*x1", v4, o4),
      parse_polynomial("x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2", v4, o4),
      parse_polynomial("x1*x2*x3*x4 - 1", v4, o4)};
  std::vector<LadderRung> zero{{{}, 0.0}};
  CHECK(is_trivial_ideal(hard, o4, zero).verdict == Triviality::Exhausted);
}
