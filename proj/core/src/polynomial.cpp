#include "coxcube/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxcube {

std::string Variable::name() const {
  switch (kind) {
    case Kind::X:
      return "x" + std::to_string(a);
    case Kind::Z:
      return "z_" + std::to_string(a) + "_" + std::to_string(b);
    case Kind::T:
      return "t" + std::to_string(a);
  }
  return "?";
}

Variable variable_from_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (name[0] == 'x') return Variable::x(std::stoi(name.substr(1)));
  if (name[0] == 't') return Variable::t(std::stoi(name.substr(1)));
  if (name[0] == 'z') {
    size_t p1 = name.find('_');
    size_t p2 = name.find('_', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::invalid_argument("bad z variable: " + name);
    return Variable::z(std::stoi(name.substr(p1 + 1, p2 - p1 - 1)),
                       std::stoi(name.substr(p2 + 1)));
  }
  throw std::invalid_argument("bad variable name: " + name);
}

TermOrder TermOrder::lex(int nvars) {
  TermOrder o;
  o.kind = OrderKind::Lex;
  o.priority.resize(nvars);
  for (int i = 0; i < nvars; ++i) o.priority[i] = i;
  return o;
}

TermOrder TermOrder::grevlex(int nvars) {
  TermOrder o = lex(nvars);
  o.kind = OrderKind::GrevLex;
  return o;
}

TermOrder TermOrder::with_last(std::span<const int> last) const {
  TermOrder o = *this;
  std::vector<int> head, tail;
  for (int slot : priority) {
    bool demote = std::find(last.begin(), last.end(), slot) != last.end();
    (demote ? tail : head).push_back(slot);
  }
  o.priority = head;
  o.priority.insert(o.priority.end(), tail.begin(), tail.end());
  return o;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Lex) {
    for (int slot : priority) {
      if (a.e[slot] != b.e[slot]) return a.e[slot] <=> b.e[slot];
    }
    return std::strong_ordering::equal;
  }
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // graded reverse lex: compare from the least significant slot; the one
  // with the *smaller* exponent there is larger
  for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
    if (a.e[*it] != b.e[*it]) return b.e[*it] <=> a.e[*it];
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (c != 0) p.terms.push_back({Monomial{}, std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int idx) {
  Polynomial p;
  p.terms.push_back({Monomial::var(idx), Rational(1)});
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].mono == b.terms[i].mono && a.terms[i].coeff == b.terms[i].coeff))
      return false;
  return true;
}

void normalize(Polynomial& p, const TermOrder& order) {
  std::sort(p.terms.begin(), p.terms.end(),
            [&](const Term& s, const Term& t) { return order.less(t.mono, s.mono); });
  size_t w = 0;
  for (size_t r = 0; r < p.terms.size();) {
    size_t r2 = r + 1;
    Rational c = p.terms[r].coeff;
    while (r2 < p.terms.size() && p.terms[r2].mono == p.terms[r].mono)
      c += p.terms[r2++].coeff;
    if (c != 0) {
      p.terms[w].mono = p.terms[r].mono;
      p.terms[w].coeff = std::move(c);
      ++w;
    }
    r = r2;
  }
  p.terms.resize(w);
}

// merge two descending term lists
Polynomial add(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  Polynomial r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    auto cmp = order.compare(f.terms[i].mono, g.terms[j].mono);
    if (cmp == std::strong_ordering::greater) {
      r.terms.push_back(f.terms[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.terms.push_back(g.terms[j++]);
    } else {
      Rational c = f.terms[i].coeff + g.terms[j].coeff;
      if (c != 0) r.terms.push_back({f.terms[i].mono, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
  return r;
}

Polynomial scale(const Polynomial& f, const Rational& c) {
  if (c == 0) return {};
  Polynomial r = f;
  for (auto& t : r.terms) t.coeff *= c;
  return r;
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  return add(f, scale(g, Rational(-1)), order);
}

Polynomial mul_term(const Polynomial& f, const Monomial& m, const Rational& c,
                    const TermOrder& order) {
  (void)order;  // multiplying by a monomial preserves descending order
  if (c == 0) return {};
  Polynomial r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) r.terms.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial sub_mul(const Polynomial& f, const Rational& c, const Monomial& m,
                   const Polynomial& g, const TermOrder& order) {
  return add(f, mul_term(g, m, -c, order), order);
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  Polynomial acc;
  const Polynomial& small = f.terms.size() <= g.terms.size() ? f : g;
  const Polynomial& big = f.terms.size() <= g.terms.size() ? g : f;
  for (const auto& t : small.terms) acc = add(acc, mul_term(big, t.mono, t.coeff, order), order);
  return acc;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return scale(f, 1 / f.leading().coeff);
}

Polynomial make_primitive(const Polynomial& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1;
  for (const auto& t : f.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                        t.coeff.get_den().get_mpz_t());
  mpz_class content = 0;
  for (const auto& t : f.terms) {
    mpz_class num = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational factor(den, content);
  factor.canonicalize();
  if (sign(f.leading().coeff) < 0) factor = -factor;
  return scale(f, factor);
}

bool proportional(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms.size() != g.terms.size()) return false;
  Rational ratio = f.terms[0].coeff / g.terms[0].coeff;
  for (size_t i = 0; i < f.terms.size(); ++i)
    if (!(f.terms[i].mono == g.terms[i].mono && f.terms[i].coeff == g.terms[i].coeff * ratio))
      return false;
  return true;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  Rational acc = 0;
  for (const auto& t : f.terms) {
    Rational v = t.coeff;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      for (int k = 0; k < t.mono.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

QInterval evaluate(const Polynomial& f, std::span<const QInterval> box) {
  QInterval acc(Rational(0));
  for (const auto& t : f.terms) {
    QInterval v{t.coeff, t.coeff};
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      for (int k = 0; k < t.mono.e[i]; ++k) v = v * box[i];
    acc = acc + v;
  }
  return acc;
}

bool involves(const Polynomial& f, int var_idx) {
  for (const auto& t : f.terms)
    if (t.mono.e[var_idx]) return true;
  return false;
}

std::string to_string(const Polynomial& f, const VarSet& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms) {
    Rational c = t.coeff;
    if (first) {
      if (sign(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || t.mono.is_one()) factors.push_back(c.get_str());
    for (int i = 0; i < vars.size(); ++i) {
      if (!t.mono.e[i]) continue;
      std::string f = vars.vars[i].name();
      if (t.mono.e[i] > 1) f += "^" + std::to_string(int(t.mono.e[i]));
      factors.push_back(std::move(f));
    }
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarSet& vars,
                            const TermOrder& order) {
  Lexer lx{text};
  Polynomial result;

  auto parse_number = [&]() -> Rational {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/'))
      ++lx.pos;
    Rational q(lx.s.substr(start, lx.pos - start));
    q.canonicalize();
    return q;
  };
  auto parse_name = [&]() -> std::string {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      ++lx.pos;
    return lx.s.substr(start, lx.pos - start);
  };

  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.pos >= lx.s.size()) break;
    Rational sign_factor = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign_factor = -1;
    } else if (!first) {
      throw std::invalid_argument("parse_polynomial: expected + or - in: " + text);
    }
    first = false;

    Rational coeff = sign_factor;
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        Variable v = variable_from_name(parse_name());
        int idx = vars.index_of(v);
        if (idx < 0)
          throw std::invalid_argument("parse_polynomial: unknown variable " + v.name());
        int exp = 1;
        if (lx.eat('^')) exp = static_cast<int>(parse_number().get_num().get_si());
        mono = mono * Monomial::var(idx, exp);
      } else {
        throw std::invalid_argument("parse_polynomial: unexpected character in: " + text);
      }
      expect_factor = lx.eat('*');
    }
    result.terms.push_back({mono, coeff});
  }
  normalize(result, order);
  return result;
}

}  // namespace coxcube
