#pragma once

#include <gmpxx.h>

#include <string>

namespace coxcube {

/// Exact arbitrary-precision rational; denominators positive, always
/// canonical (gcd-reduced). Backed by GMP.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Decimal rendering with the given number of fractional digits, rounded
/// toward -infinity (used for interval endpoints so enclosures stay valid:
/// pass round_up = true for upper endpoints).
std::string to_decimal(const Rational& q, int digits, bool round_up = false);

/// Parse "p/q" or integer text.
Rational rational_from_string(const std::string& text);

}  // namespace coxcube
