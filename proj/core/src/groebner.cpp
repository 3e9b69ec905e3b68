#include "coxcube/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

namespace coxcube {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double budget_s;
  explicit Deadline(double budget) : budget_s(budget) {}
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  bool expired() const { return budget_s >= 0 && elapsed() > budget_s; }
};

// full normal form; reducers scanned in order (deterministic)
Polynomial reduce_full(Polynomial w, std::span<const Polynomial> G, const TermOrder& order,
                       const Deadline* deadline, bool* timed_out,
                       std::vector<Polynomial>* quotients = nullptr) {
  Polynomial done;
  int steps = 0;
  while (!w.is_zero()) {
    if (deadline && (++steps & 15) == 0 && deadline->expired()) {
      *timed_out = true;
      return done;
    }
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      const Polynomial& g = G[k];
      if (g.is_zero()) continue;
      if (!g.leading().mono.divides(w.leading().mono)) continue;
      Monomial m = w.leading().mono / g.leading().mono;
      Rational c = w.leading().coeff / g.leading().coeff;
      if (quotients)
        (*quotients)[k] = add((*quotients)[k], {{{m, c}}}, order);
      w = sub_mul(w, c, m, g, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      done.terms.push_back(w.leading());
      w.terms.erase(w.terms.begin());
    }
  }
  return done;
}

struct Pair {
  int deg;
  Monomial lcm;
  int i, j;
};

struct PairCmp {
  const TermOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto c = order->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial: zero input");
  Monomial L = Monomial::lcm(f.leading().mono, g.leading().mono);
  Polynomial a = mul_term(f, L / f.leading().mono, 1 / f.leading().coeff, order);
  Polynomial b = mul_term(g, L / g.leading().mono, 1 / g.leading().coeff, order);
  return sub(a, b, order);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const TermOrder& order) {
  bool timed_out = false;
  return reduce_full(f, G, order, nullptr, &timed_out);
}

Polynomial normal_form_with_quotients(const Polynomial& f, std::span<const Polynomial> G,
                                      const TermOrder& order,
                                      std::vector<Polynomial>* quotients) {
  quotients->assign(G.size(), Polynomial::zero());
  bool timed_out = false;
  return reduce_full(f, G, order, nullptr, &timed_out, quotients);
}

GBResult buchberger(std::span<const Polynomial> F, const TermOrder& order, double budget_s) {
  Deadline deadline(budget_s);
  GBResult out;

  // normalize input, drop zeros, keep primitive integer forms
  std::vector<Polynomial> G;
  for (const Polynomial& f : F) {
    Polynomial p = f;
    normalize(p, order);
    if (!p.is_zero()) G.push_back(make_primitive(p));
  }
  auto finish_unit = [&] {
    out.basis = {Polynomial::constant(1)};
    out.elapsed_s = deadline.elapsed();
    return out;
  };
  if (G.empty()) {
    out.basis.clear();
    return out;
  }
  for (const auto& g : G)
    if (g.is_constant()) return finish_unit();

  // interreduce the input once; shrinks the 495-determinant systems a lot
  {
    std::vector<Polynomial> reduced;
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
      auto c = order.compare(a.leading().mono, b.leading().mono);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return a.terms.size() < b.terms.size();
    });
    bool timed_out = false;
    for (const Polynomial& g : G) {
      Polynomial r = reduce_full(g, reduced, order, &deadline, &timed_out);
      if (timed_out) {
        out.status = GBStatus::TimedOut;
        out.elapsed_s = deadline.elapsed();
        return out;
      }
      if (r.is_zero()) continue;
      if (r.is_constant()) return finish_unit();
      reduced.push_back(make_primitive(r));
    }
    G = std::move(reduced);
  }

  PairCmp cmp{&order};
  std::set<Pair, PairCmp> queue(cmp);
  std::unordered_set<std::uint64_t> handled;
  auto key = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  };
  auto push_pair = [&](int i, int j) {
    Monomial L = Monomial::lcm(G[i].leading().mono, G[j].leading().mono);
    queue.insert({L.degree(), L, std::min(i, j), std::max(i, j)});
  };
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = 0; j < i; ++j) push_pair(static_cast<int>(j), static_cast<int>(i));

  while (!queue.empty()) {
    out.queue_peak = std::max(out.queue_peak, static_cast<std::uint64_t>(queue.size()));
    if (deadline.expired()) {
      out.status = GBStatus::TimedOut;
      out.elapsed_s = deadline.elapsed();
      return out;
    }
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    handled.insert(key(p.i, p.j));

    const Monomial& li = G[p.i].leading().mono;
    const Monomial& lj = G[p.j].leading().mono;
    // product criterion
    if (Monomial::coprime(li, lj)) {
      ++out.pairs_skipped;
      continue;
    }
    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
      if (!G[k].leading().mono.divides(p.lcm)) continue;
      if (handled.count(key(p.i, static_cast<int>(k))) &&
          handled.count(key(p.j, static_cast<int>(k))))
        skip = true;
    }
    if (skip) {
      ++out.pairs_skipped;
      continue;
    }

    ++out.pairs_processed;
    Polynomial s = s_polynomial(G[p.i], G[p.j], order);
    bool timed_out = false;
    Polynomial r = reduce_full(std::move(s), G, order, &deadline, &timed_out);
    if (timed_out) {
      out.status = GBStatus::TimedOut;
      out.elapsed_s = deadline.elapsed();
      return out;
    }
    if (r.is_zero()) continue;
    if (r.is_constant()) return finish_unit();
    G.push_back(make_primitive(r));
    int newi = static_cast<int>(G.size()) - 1;
    for (int i = 0; i < newi; ++i) push_pair(i, newi);
  }

  // reduce the basis: minimal leading monomials, then tail-reduce, monic
  std::vector<char> keep(G.size(), 1);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (G[j].leading().mono.divides(G[i].leading().mono) &&
          !(G[i].leading().mono == G[j].leading().mono && j > i))
        keep[i] = 0;
    }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(G[i]);

  std::vector<Polynomial> reduced_basis(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    bool timed_out = false;
    reduced_basis[i] = make_monic(reduce_full(minimal[i], others, order, &deadline, &timed_out));
    if (timed_out) {
      out.status = GBStatus::TimedOut;
      out.elapsed_s = deadline.elapsed();
      return out;
    }
  }
  std::sort(reduced_basis.begin(), reduced_basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.compare(a.leading().mono, b.leading().mono) ==
                     std::strong_ordering::less;
            });
  out.basis = std::move(reduced_basis);
  out.elapsed_s = deadline.elapsed();
  return out;
}

TrivialityResult is_trivial_ideal(std::span<const Polynomial> F, const TermOrder& order,
                                  std::span<const LadderRung> ladder) {
  TrivialityResult result;
  Deadline total(-1);
  for (size_t r = 0; r < ladder.size(); ++r) {
    const LadderRung& rung = ladder[r];

    std::vector<Polynomial> first_phase, rest;
    for (const Polynomial& f : F) {
      bool deferred = false;
      for (int slot : rung.deferred_slots) deferred = deferred || involves(f, slot);
      (deferred ? rest : first_phase).push_back(f);
    }

    GBResult g1;
    if (first_phase.empty()) {
      g1.basis.clear();
    } else {
      g1 = buchberger(first_phase, order, rung.budget_s);
      if (g1.status == GBStatus::TimedOut) continue;
      if (g1.is_unit_ideal()) {
        result.verdict = Triviality::Trivial;
        result.gb = std::move(g1);
        result.rung_used = static_cast<int>(r);
        result.elapsed_s = total.elapsed();
        return result;
      }
    }

    std::vector<Polynomial> combined = g1.basis;
    for (const Polynomial& f : rest) combined.push_back(f);
    GBResult g = buchberger(combined, order, rung.budget_s);
    if (g.status == GBStatus::TimedOut) continue;
    result.verdict = g.is_unit_ideal() ? Triviality::Trivial : Triviality::NonTrivial;
    result.gb = std::move(g);
    result.rung_used = static_cast<int>(r);
    result.elapsed_s = total.elapsed();
    return result;
  }
  result.elapsed_s = total.elapsed();
  return result;
}

std::vector<LadderRung> default_ladder(const VarSet& vars, std::span<const double> budgets) {
  auto budget = [&](size_t i) {
    if (budgets.empty()) return i == 0 ? 5.0 : (i == 1 ? 10.0 : (i == 2 ? 20.0 : 600.0));
    return budgets[std::min(i, budgets.size() - 1)];
  };

  std::vector<LadderRung> ladder;
  ladder.push_back({{}, budget(0)});

  auto slot = [&](const Variable& v) { return vars.index_of(v); };
  auto add_pair_rung = [&](int m, int i, double b) {
    std::vector<int> slots;
    if (int s = slot(Variable::t(m)); s >= 0) slots.push_back(s);
    if (int s = slot(Variable::x(i)); s >= 0) slots.push_back(s);
    if (slots.empty()) return false;
    for (const auto& r : ladder)
      if (r.deferred_slots == slots) return false;
    ladder.push_back({slots, b});
    return true;
  };

  add_pair_rung(5, 1, budget(1));
  add_pair_rung(4, 2, budget(2));
  for (int m : {4, 5, 6})
    for (int i = 1; i <= 6; ++i) add_pair_rung(m, i, budget(2));

  ladder.push_back({{}, budget(3)});
  return ladder;
}

}  // namespace coxcube
