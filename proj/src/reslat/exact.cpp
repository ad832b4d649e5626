#include "reslat/exact.hpp"

#include <mpfr.h>

#include <algorithm>

namespace reslat {

ExactResistance& ExactResistance::operator+=(const ExactResistance& o) {
  p += o.p;
  q += o.q;
  s += o.s;
  return *this;
}

ExactResistance& ExactResistance::operator-=(const ExactResistance& o) {
  p -= o.p;
  q -= o.q;
  s -= o.s;
  return *this;
}

ExactResistance& ExactResistance::operator*=(const mpq_class& c) {
  p *= c;
  q *= c;
  s *= c;
  return *this;
}

namespace {

std::size_t rational_bits(const mpq_class& v) {
  return mpz_sizeinbase(v.get_num_mpz_t(), 2) +
         mpz_sizeinbase(v.get_den_mpz_t(), 2);
}

}  // namespace

double ExactResistance::to_double() const {
  const std::size_t bits =
      64 + std::max({rational_bits(p), rational_bits(q), rational_bits(s)});
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);

  mpfr_t pi, acc, term;
  mpfr_init2(pi, prec);
  mpfr_init2(acc, prec);
  mpfr_init2(term, prec);

  mpfr_const_pi(pi, MPFR_RNDN);

  // acc = q + s*sqrt(3)
  mpfr_sqrt_ui(acc, 3, MPFR_RNDN);
  mpfr_mul_q(acc, acc, s.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(term, q.get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, term, MPFR_RNDN);
  // acc = acc/pi + p
  mpfr_div(acc, acc, pi, MPFR_RNDN);
  mpfr_set_q(term, p.get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, term, MPFR_RNDN);

  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clear(pi);
  mpfr_clear(acc);
  mpfr_clear(term);
  return out;
}

std::string ExactResistance::to_string() const {
  std::string out = p.get_str();
  if (q != 0) out += " + (" + q.get_str() + ")/pi";
  if (s != 0) out += " + (" + s.get_str() + ")*sqrt(3)/pi";
  return out;
}

}  // namespace reslat
