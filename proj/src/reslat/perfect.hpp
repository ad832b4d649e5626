#pragma once

#include <memory>
#include <shared_mutex>
#include <vector>

#include "reslat/exact.hpp"
#include "reslat/lattice.hpp"

namespace reslat {

/// Exact two-point resistance R0 of the perfect infinite lattice.
///
/// Values are generated in the ring {p + q/pi + s*sqrt(3)/pi} by marching
/// the discrete-harmonicity recurrence over the symmetry-reduced wedge
/// m >= n >= 0.  Away from the origin the resistance obeys
///   z * R0(m,n) = sum over the z neighbors of R0,
/// which determines each new column from the previous two once the diagonal
/// is known.  Square diagonal: R0(n,n) = (2/pi) * sum_{k=1..n} 1/(2k-1).
/// Triangular diagonal: closed form via Chebyshev reduction of the lattice
/// Green integral (see triangular_diagonal).  Exact rational arithmetic
/// sidesteps the notorious floating-point instability of these recurrences.
class ResistanceProvider {
 public:
  explicit ResistanceProvider(LatticeKind kind);

  LatticeKind kind() const { return kind_; }

  /// Exact R0 between two sites (depends only on the displacement).
  ExactResistance r0_exact(Site i, Site j) const;

  /// Exact R0 for a displacement (m, n) in the primitive basis.
  ExactResistance r0_exact_index(std::int64_t m, std::int64_t n) const;

  double r0(Site i, Site j) const;
  double r0_index(std::int64_t m, std::int64_t n) const;

  /// Pre-warm the cache so every displacement with |m|,|n| <= max_index can
  /// be served with a shared lock.  Call before fanning queries across
  /// threads.
  void ensure_range(std::int64_t max_index) const;

  /// Point-group reduction to the wedge m >= n >= 0 (8 elements for the
  /// square lattice, 12 for the triangular one).  Exposed for tests.
  static std::pair<std::int64_t, std::int64_t> reduce(LatticeKind kind,
                                                      std::int64_t m,
                                                      std::int64_t n);

 private:
  const ExactResistance& wedge_at(std::int64_t m, std::int64_t n) const;
  void extend_locked(std::int64_t target) const;

  LatticeKind kind_;
  mutable std::shared_mutex mutex_;
  // wedge_[m][n] = R0(m, n) for 0 <= n <= m.
  mutable std::vector<std::vector<ExactResistance>> wedge_;
};

/// Square-lattice diagonal R0(n,n) = (2/pi) * (1 + 1/3 + ... + 1/(2n-1)).
ExactResistance square_diagonal(std::int64_t n);

/// Triangular-lattice diagonal R0(n,n) in the ring {p + s*sqrt(3)/pi}.
///
/// Derived from the Brillouin-zone integral by integrating out the
/// transverse mode:
///   R(n,n) = (1/pi) * Int_{pi/6}^{pi/2} (2 sin t - 1) * q_n(4 sin t (1 - sin t)) dt,
/// where q_n is the polynomial with 1 - T_{2n}(x) = (1 - x^2) q_n(x^2)
/// (T Chebyshev).  The sine moments over [pi/6, pi/2] lie in
/// Q + Q*sqrt(3) + Q*pi, and the pure rational part cancels identically.
ExactResistance triangular_diagonal(std::int64_t n);

/// Large-separation form of the square-lattice resistance,
/// (1/pi) * (ln sqrt(m^2+n^2) + gamma + ln(8)/2).  Throws DomainError at the
/// origin.
double asymptotic_r0(std::int64_t m, std::int64_t n);

}  // namespace reslat
