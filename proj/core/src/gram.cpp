#include "coxcube/gram.hpp"

#include <algorithm>

namespace coxcube {

TermOrder default_order(const VarSet& vars, OrderKind kind) {
  TermOrder o;
  o.kind = kind;
  std::vector<int> slots(vars.vars.size());
  for (size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
  auto rank = [&](int slot) {
    const Variable& v = vars.vars[slot];
    // t first (ascending m), then z, then x with higher index first
    switch (v.kind) {
      case Variable::Kind::T:
        return std::tuple(0, int(v.a), int(v.b));
      case Variable::Kind::Z:
        return std::tuple(1, int(v.a), int(v.b));
      case Variable::Kind::X:
        return std::tuple(2, -int(v.a), 0);
    }
    return std::tuple(3, 0, 0);
  };
  std::sort(slots.begin(), slots.end(), [&](int a, int b) { return rank(a) < rank(b); });
  o.priority = slots;
  return o;
}

SymbolicGram build_gram(const CoxMatrix& m, int n,
                        const std::map<std::pair<int, int>, int>* seven_substitution) {
  if (!m.fully_determined()) throw std::invalid_argument("build_gram: undetermined matrix");
  SymbolicGram g;
  g.n = n;

  // collect variables: x per pair, then z or substituted t per seven-pair,
  // then t_m per label present
  for (int i = 1; i <= n; ++i) g.vars.vars.push_back(Variable::x(i));
  std::map<std::pair<int, int>, Variable> seven_vars;
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < i; ++j) {
      if (m.at(i, j) != 7) continue;
      std::pair<int, int> key{j, i};
      int sub = 0;
      if (seven_substitution) {
        auto it = seven_substitution->find(key);
        if (it != seven_substitution->end()) {
          if (it->second < 7) throw std::invalid_argument("build_gram: substitution below 7");
          sub = it->second;
        }
      }
      // names use 1-based facet indices
      Variable v = sub ? Variable::t(sub) : Variable::z(j + 1, i + 1);
      seven_vars[key] = v;
      if (g.vars.index_of(v) < 0) g.vars.vars.push_back(v);
    }
  bool has_t[3] = {false, false, false};
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < i; ++j) {
      Label v = m.at(i, j);
      if (v >= 4 && v <= 6) has_t[v - 4] = true;
    }
  for (int mlab = 4; mlab <= 6; ++mlab)
    if (has_t[mlab - 4]) g.vars.vars.push_back(Variable::t(mlab));

  auto var_poly = [&](const Variable& v) {
    int idx = g.vars.index_of(v);
    if (idx < 0) throw std::logic_error("build_gram: missing variable");
    return Polynomial::variable(idx);
  };

  int sz = m.size;
  g.doubled.assign(sz, std::vector<Polynomial>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      Label lab = m.at(i, j);
      Polynomial entry;
      if (i == j) {
        entry = Polynomial::constant(2);
      } else if (lab == kInfinity) {
        if (j != opposite(i))
          throw std::invalid_argument("build_gram: infinity off the opposite pairs");
        entry = scale(var_poly(Variable::x(pair_of(i) + 1)), 2);
      } else if (lab == 2) {
        entry = Polynomial::zero();
      } else if (lab == 3) {
        entry = Polynomial::constant(-1);
      } else if (lab >= 4 && lab <= 6) {
        entry = scale(var_poly(Variable::t(lab)), -1);
      } else if (lab == 7) {
        entry = scale(var_poly(seven_vars.at({std::min(i, j), std::max(i, j)})), -1);
      } else {
        throw std::invalid_argument("build_gram: label out of range");
      }
      g.doubled[i][j] = std::move(entry);
    }
  return g;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  Polynomial rem = f, quot;
  while (!rem.is_zero()) {
    if (!g.leading().mono.divides(rem.leading().mono))
      throw std::domain_error("divide_exact: not divisible");
    Monomial m = rem.leading().mono / g.leading().mono;
    Rational c = rem.leading().coeff / g.leading().coeff;
    quot.terms.push_back({m, c});
    rem = sub_mul(rem, c, m, g, order);
  }
  normalize(quot, order);
  return quot;
}

namespace {

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& a, const TermOrder& order) {
  size_t k = a.size();
  if (k == 1) return a[0][0];
  Polynomial acc;
  for (size_t col = 0; col < k; ++col) {
    if (a[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor(k - 1);
    for (size_t i = 1; i < k; ++i) {
      minor[i - 1].reserve(k - 1);
      for (size_t j = 0; j < k; ++j)
        if (j != col) minor[i - 1].push_back(a[i][j]);
    }
    Polynomial term = mul(a[0][col], det_cofactor(minor, order), order);
    if (col % 2 == 1) term = scale(term, -1);
    acc = add(acc, term, order);
  }
  return acc;
}

Polynomial det_bareiss(std::vector<std::vector<Polynomial>> a, const TermOrder& order) {
  size_t k = a.size();
  Polynomial prev = Polynomial::constant(1);
  int sign_flips = 0;
  for (size_t step = 0; step + 1 < k; ++step) {
    if (a[step][step].is_zero()) {
      size_t swap_row = step + 1;
      while (swap_row < k && a[swap_row][step].is_zero()) ++swap_row;
      if (swap_row == k) return Polynomial::zero();  // singular column
      std::swap(a[step], a[swap_row]);
      ++sign_flips;
    }
    for (size_t i = step + 1; i < k; ++i) {
      for (size_t j = step + 1; j < k; ++j) {
        Polynomial num = sub(mul(a[i][j], a[step][step], order),
                             mul(a[i][step], a[step][j], order), order);
        a[i][j] = divide_exact(num, prev, order);
      }
      a[i][step] = Polynomial::zero();
    }
    prev = a[step][step];
  }
  Polynomial det = a[k - 1][k - 1];
  return (sign_flips % 2) ? scale(det, -1) : det;
}

}  // namespace

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& a, const TermOrder& order) {
  size_t k = a.size();
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("det_poly: non-square matrix");
  if (k == 0) return Polynomial::constant(1);
  if (k <= 4) return det_cofactor(a, order);
  return det_bareiss(a, order);
}

GramSystem generate_conditions(const SymbolicGram& gram) {
  GramSystem sys;
  sys.n = gram.n;
  sys.vars = gram.vars;
  sys.gram = gram;
  TermOrder order = default_order(sys.vars, OrderKind::GrevLex);

  int sz = 2 * gram.n;
  int want = gram.n + 2;
  std::vector<int> subset;
  std::vector<Polynomial> dets;

  auto emit = [&](const std::vector<int>& s) {
    ++sys.raw_subset_count;
    std::vector<std::vector<Polynomial>> block(s.size(), std::vector<Polynomial>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = 0; j < s.size(); ++j) block[i][j] = gram.doubled[s[i]][s[j]];
    Polynomial d = det_poly(block, order);
    bool touches_all = true;
    for (int p = 0; p < gram.n; ++p) {
      bool touch = false;
      for (int idx : s) touch |= (pair_of(idx) == p);
      touches_all &= touch;
    }
    if (touches_all) ++sys.pair_touching_count;
    if (d.is_zero()) return;
    d = make_primitive(d);
    for (const auto& seen : dets)
      if (proportional(seen, d)) return;
    dets.push_back(std::move(d));
  };

  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == want) {
      emit(subset);
      return;
    }
    if (sz - next < want - static_cast<int>(subset.size())) return;
    for (int i = next; i < sz; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  if (want <= sz) rec(rec, 0);
  sys.distinct_determinants = static_cast<int>(dets.size());
  sys.determinants = dets;

  // defining equations of the cosine variables
  for (size_t slot = 0; slot < sys.vars.vars.size(); ++slot) {
    const Variable& v = sys.vars.vars[slot];
    if (v.kind != Variable::Kind::T) continue;
    Polynomial eq;
    if (v.a == 4) {
      eq = parse_polynomial("t4^2 - 2", sys.vars, order);
    } else if (v.a == 5) {
      eq = parse_polynomial("t5^2 - t5 - 1", sys.vars, order);
    } else if (v.a == 6) {
      eq = parse_polynomial("t6^2 - 3", sys.vars, order);
    } else {
      eq = multivariate_from(two_cos_defining_poly(v.a), static_cast<int>(slot), order);
    }
    sys.t_equations.push_back(eq);
  }

  sys.conditions = dets;
  for (const auto& eq : sys.t_equations) sys.conditions.push_back(eq);
  return sys;
}

}  // namespace coxcube
