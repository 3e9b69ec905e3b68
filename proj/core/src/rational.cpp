#include "coxcube/rational.hpp"

#include "coxcube/interval.hpp"

namespace coxcube {

std::string to_decimal(const Rational& q, int digits, bool round_up) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = q.get_num() * scale;
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  if (round_up && rem != 0) quot += 1;

  bool neg = quot < 0;
  mpz_class a = abs(quot);
  std::string body = a.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

Rational rational_from_string(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

QInterval sqrt_enclosure(const Rational& q, unsigned frac_bits) {
  if (sign(q) < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  // sqrt(p/d) = sqrt(p*d)/d; floor(sqrt(p*d*4^k)) brackets it at width
  // 1/(d*2^k) <= 2^-k.
  mpz_class scaled = q.get_num() * q.get_den();
  scaled <<= 2 * frac_bits;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class denom = q.get_den() << frac_bits;
  Rational lo(root, denom), hi(root + (root * root == scaled ? 0 : 1), denom);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

QInterval sqrt_enclosure(const QInterval& x, unsigned frac_bits) {
  if (sign(x.lo) < 0) throw std::domain_error("sqrt_enclosure: interval below zero");
  return {sqrt_enclosure(x.lo, frac_bits).lo, sqrt_enclosure(x.hi, frac_bits).hi};
}

}  // namespace coxcube
