#include "coxcube/univariate.hpp"

#include <algorithm>

namespace coxcube {

namespace {

void trim(QPoly& p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

int sign_at(const QPoly& p, const Rational& x) { return sign(qp_eval(p, x)); }

// Sturm chain: p, p', then negated euclidean remainders.
std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  QPoly d = qp_derivative(p);
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && chain.back().degree() >= 1) {
    QPoly r = qp_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(qp_scale(r, Rational(-1)));
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  const Rational& lead = p.c.back();
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    Rational a = abs(p.c[i] / lead);
    if (a > m) m = a;
  }
  return m + 1;
}

}  // namespace

QPoly QPoly::from(std::vector<Rational> coeffs) {
  QPoly p{std::move(coeffs)};
  trim(p);
  return p;
}
QPoly QPoly::x() { return {{Rational(0), Rational(1)}}; }
QPoly QPoly::constant(Rational v) {
  QPoly p;
  if (v != 0) p.c.push_back(std::move(v));
  return p;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r);
  return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) { return qp_add(a, qp_scale(b, Rational(-1))); }

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly r;
  r.c.resize(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  trim(r);
  return r;
}

QPoly qp_scale(const QPoly& a, const Rational& s) {
  if (s == 0) return {};
  QPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

QPoly qp_derivative(const QPoly& a) {
  QPoly r;
  for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * static_cast<long>(i));
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("qp_divmod: division by zero");
  QPoly q, r = a;
  q.c.assign(a.c.size(), Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.c.back() / b.c.back();
    q.c[k] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

QPoly qp_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = qp_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qp_monic(a);
}

QPoly qp_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return qp_scale(p, 1 / p.c.back());
}

QPoly qp_squarefree(const QPoly& p) {
  if (p.degree() <= 1) return qp_monic(p);
  QPoly g = qp_gcd(p, qp_derivative(p));
  if (g.degree() == 0) return qp_monic(p);
  return qp_monic(qp_divmod(p, g).first);
}

Rational qp_eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QInterval qp_eval(const QPoly& p, const QInterval& x) {
  QInterval acc{Rational(0), Rational(0)};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + QInterval(*it);
  return acc;
}

bool qp_is_root(const QPoly& p, const Rational& x) { return qp_eval(p, x) == 0; }

int sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(qp_squarefree(p));
  return variations(chain, a) - variations(chain, b);
}

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p) {
  std::vector<IsolatedRoot> out;
  if (p.degree() <= 0) return out;
  QPoly sf = qp_squarefree(p);
  QPoly mult_part = qp_gcd(p, qp_derivative(p));  // roots here are multiple

  if (sf.degree() == 1) {
    Rational root = -sf.c[0] / sf.c[1];
    out.push_back({QInterval(root), qp_is_root(mult_part, root)});
    return out;
  }

  auto chain = sturm_chain(sf);
  Rational bound = cauchy_bound(sf);

  // nudge an endpoint off a root of sf
  auto off_root = [&](Rational x, const Rational& step) {
    Rational s = step;
    while (qp_is_root(sf, x)) {
      x += s;
      s /= 2;
    }
    return x;
  };

  struct Seg {
    Rational a, b;
    int count;
  };
  Rational lo = -bound, hi = bound;  // p(+-bound) != 0 by the root bound
  std::vector<Seg> stack{{lo, hi, variations(chain, lo) - variations(chain, hi)}};
  std::vector<QInterval> boxes;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      boxes.push_back({s.a, s.b});
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    if (qp_is_root(sf, mid)) {
      boxes.push_back({mid, mid});
      // bracket mid tightly enough that (left_end, right_end] holds no
      // other root, then recurse on the two outer segments
      Rational step = (s.b - s.a) / 4;
      Rational left_end, right_end;
      int cl, cr;
      while (true) {
        left_end = off_root(mid - step, -step / 2);
        right_end = off_root(mid + step, step / 2);
        cl = variations(chain, s.a) - variations(chain, left_end);
        cr = variations(chain, right_end) - variations(chain, s.b);
        if (cl + cr + 1 == s.count) break;
        step /= 4;
      }
      stack.push_back({s.a, left_end, cl});
      stack.push_back({right_end, s.b, cr});
    } else {
      stack.push_back({s.a, mid, variations(chain, s.a) - variations(chain, mid)});
      stack.push_back({mid, s.b, variations(chain, mid) - variations(chain, s.b)});
    }
  }
  std::sort(boxes.begin(), boxes.end(),
            [](const QInterval& a, const QInterval& b) { return a.lo < b.lo; });
  for (auto& b : boxes) {
    bool multiple = false;
    if (mult_part.degree() >= 1)
      multiple = b.is_point() ? qp_is_root(mult_part, b.lo)
                              : sturm_count(mult_part, b.lo, b.hi) > 0;
    out.push_back({b, multiple});
  }
  return out;
}

QInterval refine_root(const QPoly& sf, QInterval box, const Rational& width) {
  if (box.is_point()) return box;
  if (qp_is_root(sf, box.hi)) return QInterval(box.hi);

  int sa = sign_at(sf, box.lo);
  if (sa == 0)
    throw std::logic_error("refine_root: isolating interval is open at a root");
  int sb = sign_at(sf, box.hi);
  if (sa == sb) throw std::logic_error("refine_root: no sign change over isolating interval");
  while (box.width() > width) {
    Rational mid = box.mid();
    int sm = sign_at(sf, mid);
    if (sm == 0) return QInterval(mid);
    if (sm == sa)
      box.lo = mid;
    else
      box.hi = mid;
  }
  return box;
}

namespace {

QPoly dickson(int m) {
  QPoly prev = QPoly::constant(2);  // D_0
  QPoly cur = QPoly::x();           // D_1
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    QPoly next = qp_sub(qp_mul(QPoly::x(), cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// square root of a monic even-degree perfect square, by descending
// coefficient matching
QPoly qp_sqrt_monic(const QPoly& w) {
  int d = w.degree() / 2;
  QPoly v;
  v.c.assign(d + 1, Rational(0));
  v.c[d] = 1;
  for (int j = d - 1; j >= 0; --j) {
    Rational acc = (d + j <= w.degree()) ? w.c[d + j] : Rational(0);
    for (int i = j + 1; i <= d - 1; ++i) {
      int k = d + j - i;
      if (k >= j + 1 && k <= d - 1) acc -= v.c[i] * v.c[k];
    }
    v.c[j] = acc / 2;
  }
  if (!qp_sub(qp_mul(v, v), w).is_zero())
    throw std::logic_error("qp_sqrt_monic: not a perfect square");
  return v;
}

}  // namespace

QPoly dickson_plus_two(int m) { return qp_add(dickson(m), QPoly::constant(2)); }

QPoly two_cos_defining_poly(int m) {
  // D_m(2cos t) + 2 = 4cos^2(mt/2): a perfect square for even m, and
  // (z+2) times a perfect square for odd m; both factors are squarefree.
  if (m % 2 == 0) return qp_monic(dickson(m / 2));
  QPoly z_plus_2 = QPoly::from({Rational(2), Rational(1)});
  QPoly w = qp_divmod(dickson_plus_two(m), z_plus_2).first;
  return qp_monic(qp_mul(z_plus_2, qp_sqrt_monic(w)));
}

QInterval two_cos_pi_over(int m, unsigned frac_bits) {
  if (m < 2) throw std::invalid_argument("two_cos_pi_over: m >= 2");
  QPoly sf = two_cos_defining_poly(m);
  auto roots = isolate_real_roots(sf);
  if (roots.empty()) throw std::logic_error("two_cos_pi_over: no roots");
  Rational width(1, mpz_class(mpz_class(1) << frac_bits));
  return refine_root(sf, roots.back().box, width);
}

QPoly univariate_in(const Polynomial& f, int slot) {
  QPoly p;
  for (const auto& t : f.terms) {
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      if (i != slot && t.mono.e[i])
        throw std::invalid_argument("univariate_in: polynomial involves other variables");
    size_t d = t.mono.e[slot];
    if (p.c.size() <= d) p.c.resize(d + 1, Rational(0));
    p.c[d] += t.coeff;
  }
  trim(p);
  return p;
}

Polynomial multivariate_from(const QPoly& p, int slot, const TermOrder& order) {
  Polynomial f;
  for (size_t d = 0; d < p.c.size(); ++d)
    if (p.c[d] != 0) f.terms.push_back({Monomial::var(slot, static_cast<int>(d)), p.c[d]});
  normalize(f, order);
  return f;
}

}  // namespace coxcube
