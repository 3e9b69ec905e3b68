#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coxcube/interval.hpp"
#include "coxcube/rational.hpp"

namespace coxcube {

// --- variables ---------------------------------------------------------------

/// Variables of the Gram condition systems: x_i for opposite-pair entries,
/// z_{i,j} per seven-pair, t_m for the cosine contrivances (m = 4,5,6 in
/// classification; larger m appear when instantiating seven-pairs in
/// cross-check mode). Facet indices are 1-based in names, matching the
/// text form x1..x6, z_i_j, t4..t6.
struct Variable {
  enum class Kind : std::uint8_t { X, Z, T };
  Kind kind = Kind::X;
  std::int16_t a = 0;  // X: pair index (1-based); Z: first facet; T: the m value
  std::int16_t b = 0;  // Z: second facet

  static Variable x(int i) { return {Kind::X, static_cast<std::int16_t>(i), 0}; }
  static Variable z(int i, int j) {
    return {Kind::Z, static_cast<std::int16_t>(std::min(i, j)),
            static_cast<std::int16_t>(std::max(i, j))};
  }
  static Variable t(int m) { return {Kind::T, static_cast<std::int16_t>(m), 0}; }

  std::string name() const;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

Variable variable_from_name(const std::string& name);

/// The (ordered) variable universe of one polynomial system. Monomial
/// exponent slots refer to positions in this list.
struct VarSet {
  std::vector<Variable> vars;

  int index_of(const Variable& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    return -1;
  }
  int size() const { return static_cast<int>(vars.size()); }
};

// --- monomials ---------------------------------------------------------------

/// Exponent vector over at most 12 variables.
struct Monomial {
  static constexpr int kMaxVars = 12;
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = e[i] + o.e[i];
      if (s > 250) throw std::overflow_error("Monomial: exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      if (o.e[i] > e[i]) throw std::domain_error("Monomial: inexact division");
      r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    }
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  static Monomial var(int idx, int exp = 1) {
    Monomial m;
    m.e[idx] = static_cast<std::uint8_t>(exp);
    return m;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 0;
    for (auto x : m.e) h = h * 131 + x;
    return h;
  }
};

// --- term orders -------------------------------------------------------------

enum class OrderKind { Lex, GrevLex };

/// Monomial order with an explicit variable priority: priority[0] is the
/// most significant variable slot.
struct TermOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> priority;  // permutation of 0..nvars-1

  static TermOrder lex(int nvars);
  static TermOrder grevlex(int nvars);
  /// Same kind with the slots in `last` demoted to least significant
  /// (used to make a chosen variable the eliminated one).
  TermOrder with_last(std::span<const int> last) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

// --- polynomials -------------------------------------------------------------

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted strictly
/// descending under the order passed to normalize()/arithmetic; the zero
/// polynomial has no terms.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || terms.front().mono.is_one(); }
  const Term& leading() const {
    if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms.front();
  }
  int total_degree() const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.mono.degree());
    return d;
  }

  static Polynomial zero() { return {}; }
  static Polynomial constant(Rational c);
  static Polynomial variable(int idx);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
};

/// Sort + combine like terms + drop zeros, descending under `order`.
void normalize(Polynomial& p, const TermOrder& order);

Polynomial add(const Polynomial& f, const Polynomial& g, const TermOrder& order);
Polynomial sub(const Polynomial& f, const Polynomial& g, const TermOrder& order);
Polynomial mul(const Polynomial& f, const Polynomial& g, const TermOrder& order);
Polynomial mul_term(const Polynomial& f, const Monomial& m, const Rational& c,
                    const TermOrder& order);
/// f - c * m * g, the reduction kernel.
Polynomial sub_mul(const Polynomial& f, const Rational& c, const Monomial& m,
                   const Polynomial& g, const TermOrder& order);
Polynomial scale(const Polynomial& f, const Rational& c);

/// Divide by the leading coefficient.
Polynomial make_monic(const Polynomial& f);

/// Integer-primitive form with positive leading coefficient (clears
/// denominators, removes content). Rational multiple of f.
Polynomial make_primitive(const Polynomial& f);

/// Are f and g nonzero rational multiples of each other?
bool proportional(const Polynomial& f, const Polynomial& g);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
QInterval evaluate(const Polynomial& f, std::span<const QInterval> box);

bool involves(const Polynomial& f, int var_idx);

/// Text form: sum of coeff*var^e*... terms, e.g. "2*x1^2*t4 - 1/2*z_1_4 + 3".
std::string to_string(const Polynomial& f, const VarSet& vars);
Polynomial parse_polynomial(const std::string& text, const VarSet& vars,
                            const TermOrder& order);

}  // namespace coxcube
