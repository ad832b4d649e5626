#pragma once

#include <gmpxx.h>

#include <string>

namespace reslat {

/// Element of the ring {p + q/pi + s*sqrt(3)/pi : p, q, s rational}, the
/// exact carrier for perfect-lattice resistances (in units of R).  Square
/// lattice values have s = 0, triangular ones have q = 0.
struct ExactResistance {
  mpq_class p;  // rational part
  mpq_class q;  // coefficient of 1/pi
  mpq_class s;  // coefficient of sqrt(3)/pi

  ExactResistance() = default;
  ExactResistance(mpq_class p_, mpq_class q_, mpq_class s_)
      : p(std::move(p_)), q(std::move(q_)), s(std::move(s_)) {}

  static ExactResistance zero() { return {}; }
  static ExactResistance rational(const mpq_class& v) { return {v, 0, 0}; }

  ExactResistance& operator+=(const ExactResistance& o);
  ExactResistance& operator-=(const ExactResistance& o);
  ExactResistance& operator*=(const mpq_class& c);

  friend ExactResistance operator+(ExactResistance a, const ExactResistance& b) {
    a += b;
    return a;
  }
  friend ExactResistance operator-(ExactResistance a, const ExactResistance& b) {
    a -= b;
    return a;
  }
  friend ExactResistance operator*(ExactResistance a, const mpq_class& c) {
    a *= c;
    return a;
  }
  friend ExactResistance operator*(const mpq_class& c, ExactResistance a) {
    a *= c;
    return a;
  }
  friend bool operator==(const ExactResistance& a, const ExactResistance& b) {
    return a.p == b.p && a.q == b.q && a.s == b.s;
  }

  bool is_zero() const { return p == 0 && q == 0 && s == 0; }

  /// Numeric value.  Evaluated at a working precision that covers the
  /// operand magnitudes; the ring components of lattice resistances grow
  /// huge while the value stays O(1), so naive double arithmetic would lose
  /// everything to cancellation.
  double to_double() const;

  /// "p + q/pi + s*sqrt(3)/pi" with rational components, e.g. "46/15/pi".
  std::string to_string() const;
};

}  // namespace reslat
