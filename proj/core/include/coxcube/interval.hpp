#pragma once

#include <optional>
#include <stdexcept>

#include "coxcube/rational.hpp"

namespace coxcube {

/// Closed interval with exact rational endpoints. All operations are
/// outward-exact (no rounding), so enclosures are certificates.
struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rational point) : lo(point), hi(point) {}
  QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("QInterval: inverted endpoints");
  }

  static QInterval hull(const QInterval& a, const QInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  bool strictly_positive() const { return sign(lo) > 0; }
  bool strictly_negative() const { return sign(hi) < 0; }
  bool intersects(const QInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  /// -1, 0 (provably zero only for the point interval), +1; nullopt when the
  /// sign is not determined by the enclosure.
  std::optional<int> determined_sign() const {
    if (strictly_positive()) return 1;
    if (strictly_negative()) return -1;
    if (is_point()) return 0;
    return std::nullopt;
  }

  QInterval operator-() const { return {-hi, -lo}; }
  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }

  QInterval operator*(const QInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }

  QInterval operator/(const QInterval& o) const {
    if (o.contains_zero()) throw std::domain_error("QInterval: division by interval containing 0");
    Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }

  QInterval operator*(const Rational& q) const {
    return sign(q) >= 0 ? QInterval{lo * q, hi * q} : QInterval{hi * q, lo * q};
  }
  QInterval operator+(const Rational& q) const { return {lo + q, hi + q}; }
};

/// Enclosure of sqrt(q), q >= 0, with width <= 2^-frac_bits.
QInterval sqrt_enclosure(const Rational& q, unsigned frac_bits);

/// Enclosure of the square root of a nonnegative interval.
QInterval sqrt_enclosure(const QInterval& x, unsigned frac_bits);

}  // namespace coxcube
