#include "reslat/perfect.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <mutex>

#include "reslat/errors.hpp"

namespace reslat {

namespace {

// Integer matrices of the triangular point group (order 12) acting on the
// (m, n) coefficients: generated by the 60-degree rotation
// (m, n) -> (-n, m+n) and the mirror (m, n) -> (m+n, -n).
struct IntMat {
  std::int64_t a, b, c, d;  // (m, n) -> (a m + b n, c m + d n)
};

constexpr std::array<IntMat, 12> kTriangularGroup = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 1},   // R
    {-1, -1, 1, 0},  // R^2
    {-1, 0, 0, -1},  // R^3
    {1, 1, -1, 0},   // R^4
    {0, 1, -1, -1},  // R^5
    {1, 1, 0, -1},   // M
    {1, 0, -1, -1},  // M R
    {0, -1, -1, 0},  // M R^2
    {-1, -1, 0, 1},  // M R^3
    {0, 1, 1, 0},    // M R^4
    {-1, 0, 1, 1},   // M R^5
}};

}  // namespace

std::pair<std::int64_t, std::int64_t> ResistanceProvider::reduce(
    LatticeKind kind, std::int64_t m, std::int64_t n) {
  if (kind == LatticeKind::Square) {
    m = std::llabs(m);
    n = std::llabs(n);
    if (m < n) std::swap(m, n);
    return {m, n};
  }
  for (const IntMat& g : kTriangularGroup) {
    const std::int64_t mm = g.a * m + g.b * n;
    const std::int64_t nn = g.c * m + g.d * n;
    if (mm >= nn && nn >= 0) return {mm, nn};
  }
  // The wedge m >= n >= 0 is a fundamental domain, so this is unreachable.
  throw DomainError("triangular point-group reduction failed");
}

ResistanceProvider::ResistanceProvider(LatticeKind kind) : kind_(kind) {
  wedge_.push_back({ExactResistance::zero()});
  if (kind_ == LatticeKind::Square) {
    wedge_.push_back({ExactResistance{mpq_class(1, 2), 0, 0}, square_diagonal(1)});
  } else {
    wedge_.push_back({ExactResistance{mpq_class(1, 3), 0, 0}, triangular_diagonal(1)});
  }
}

const ExactResistance& ResistanceProvider::wedge_at(std::int64_t m,
                                                    std::int64_t n) const {
  if (n > m) std::swap(m, n);  // symmetry fallback inside the march
  return wedge_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

void ResistanceProvider::extend_locked(std::int64_t target) const {
  while (static_cast<std::int64_t>(wedge_.size()) <= target) {
    const std::int64_t m = static_cast<std::int64_t>(wedge_.size()) - 1;
    std::vector<ExactResistance> col(static_cast<std::size_t>(m) + 2);
    if (kind_ == LatticeKind::Square) {
      // Harmonicity at (m, n): 4 R(m,n) = R(m+1,n) + R(m-1,n) + R(m,n+1) + R(m,n-1).
      col[0] = 4 * wedge_at(m, 0) - wedge_at(m - 1, 0) - 2 * wedge_at(m, 1);
      for (std::int64_t n = 1; n < m; ++n)
        col[static_cast<std::size_t>(n)] = 4 * wedge_at(m, n) -
                                           wedge_at(m - 1, n) -
                                           wedge_at(m, n + 1) -
                                           wedge_at(m, n - 1);
      // At the diagonal the mirror images fold pairwise.
      col[static_cast<std::size_t>(m)] =
          2 * wedge_at(m, m) - wedge_at(m, m - 1);
      col[static_cast<std::size_t>(m) + 1] = square_diagonal(m + 1);
    } else {
      // Harmonicity at (m, n): 6 R(m,n) = sum over (+-1,0), (0,+-1), (1,-1), (-1,1).
      col[0] = 6 * wedge_at(m, 0) - wedge_at(m - 1, 0) - 2 * wedge_at(m, 1) -
               2 * wedge_at(m - 1, 1);
      for (std::int64_t n = 1; n < m; ++n)
        col[static_cast<std::size_t>(n)] =
            6 * wedge_at(m, n) - wedge_at(m - 1, n) - wedge_at(m, n + 1) -
            wedge_at(m, n - 1) - col[static_cast<std::size_t>(n) - 1] -
            wedge_at(m - 1, n + 1);
      col[static_cast<std::size_t>(m)] = 3 * wedge_at(m, m) -
                                         wedge_at(m, m - 1) -
                                         col[static_cast<std::size_t>(m) - 1];
      col[static_cast<std::size_t>(m) + 1] = triangular_diagonal(m + 1);
    }
    wedge_.push_back(std::move(col));
  }
}

ExactResistance ResistanceProvider::r0_exact_index(std::int64_t m,
                                                   std::int64_t n) const {
  const auto [rm, rn] = reduce(kind_, m, n);
  {
    std::shared_lock lock(mutex_);
    if (rm < static_cast<std::int64_t>(wedge_.size()))
      return wedge_[static_cast<std::size_t>(rm)][static_cast<std::size_t>(rn)];
  }
  std::unique_lock lock(mutex_);
  extend_locked(rm);
  return wedge_[static_cast<std::size_t>(rm)][static_cast<std::size_t>(rn)];
}

ExactResistance ResistanceProvider::r0_exact(Site i, Site j) const {
  return r0_exact_index(j.m - i.m, j.n - i.n);
}

double ResistanceProvider::r0(Site i, Site j) const {
  return r0_exact(i, j).to_double();
}

double ResistanceProvider::r0_index(std::int64_t m, std::int64_t n) const {
  return r0_exact_index(m, n).to_double();
}

void ResistanceProvider::ensure_range(std::int64_t max_index) const {
  std::unique_lock lock(mutex_);
  extend_locked(max_index);
}

ExactResistance square_diagonal(std::int64_t n) {
  if (n < 0) throw DomainError("square_diagonal requires n >= 0");
  mpq_class sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += mpq_class(1, 2 * k - 1);
  return ExactResistance{0, 2 * sum, 0};
}

namespace {

// Coefficients of the Chebyshev polynomial T_{2n}(x) as a polynomial in
// z = x^2 (degree n, integer coefficients).
std::vector<mpz_class> chebyshev_even_in_z(std::int64_t n) {
  std::vector<mpz_class> prev = {1};      // T_0
  if (n == 0) return prev;
  std::vector<mpz_class> cur = {-1, 2};   // T_2 = 2z - 1
  // T_{2k+2}(x) = (4z - 2) T_{2k} - T_{2k-2} in the z variable.
  for (std::int64_t k = 1; k < n; ++k) {
    std::vector<mpz_class> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += 4 * cur[i];
      next[i] -= 2 * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct SurdTriple {
  // a + b*sqrt(3) + c*pi
  mpq_class a, b, c;
};

}  // namespace

ExactResistance triangular_diagonal(std::int64_t n) {
  if (n < 0) throw DomainError("triangular_diagonal requires n >= 0");
  if (n == 0) return ExactResistance::zero();

  // q_n(z) with 1 - T_{2n} = (1 - z) q_n(z): cumulative sums of 1 - tau.
  const std::vector<mpz_class> tau = chebyshev_even_in_z(n);
  std::vector<mpq_class> qpoly(static_cast<std::size_t>(n));
  mpq_class running = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    mpq_class a_i = (i == 0) ? mpq_class(1 - tau[0]) : mpq_class(-tau[static_cast<std::size_t>(i)]);
    running += a_i;
    qpoly[static_cast<std::size_t>(i)] = running;
  }

  // Substitute z = 4t - 4t^2 and multiply by (2t - 1): P(t), degree 2n-1.
  std::vector<mpq_class> poly = {0};
  std::vector<mpq_class> zpow = {1};  // (4t - 4t^2)^i
  for (std::size_t i = 0; i < qpoly.size(); ++i) {
    if (poly.size() < zpow.size()) poly.resize(zpow.size());
    for (std::size_t j = 0; j < zpow.size(); ++j) poly[j] += qpoly[i] * zpow[j];
    // zpow *= (4t - 4t^2)
    std::vector<mpq_class> nz(zpow.size() + 2);
    for (std::size_t j = 0; j < zpow.size(); ++j) {
      nz[j + 1] += 4 * zpow[j];
      nz[j + 2] -= 4 * zpow[j];
    }
    zpow = std::move(nz);
  }
  std::vector<mpq_class> integrand(poly.size() + 1);
  for (std::size_t j = 0; j < poly.size(); ++j) {
    integrand[j + 1] += 2 * poly[j];
    integrand[j] -= poly[j];
  }

  // Sine moments S_k = Int_{pi/6}^{pi/2} sin^k t dt, in Q*sqrt(3) + Q*pi.
  // S_k = (k-1)/k * S_{k-2} + (1/2)^k / k * sqrt(3); the pure rational part
  // vanishes for every k.
  std::vector<SurdTriple> moments(integrand.size());
  if (!moments.empty()) moments[0] = {0, 0, mpq_class(1, 3)};
  if (moments.size() > 1) moments[1] = {0, mpq_class(1, 2), 0};
  mpq_class half_pow = mpq_class(1, 2);  // (1/2)^k running value
  for (std::size_t k = 2; k < moments.size(); ++k) {
    half_pow /= 2;
    const mpq_class ratio(static_cast<long>(k) - 1, static_cast<long>(k));
    moments[k].a = ratio * moments[k - 2].a;
    moments[k].b = ratio * moments[k - 2].b + half_pow / static_cast<long>(k);
    moments[k].c = ratio * moments[k - 2].c;
  }

  SurdTriple total{0, 0, 0};
  for (std::size_t k = 0; k < integrand.size(); ++k) {
    total.a += integrand[k] * moments[k].a;
    total.b += integrand[k] * moments[k].b;
    total.c += integrand[k] * moments[k].c;
  }
  // R(n,n) = (1/pi) * (total.a + total.b*sqrt(3) + total.c*pi).
  if (total.a != 0)
    throw DomainError("triangular diagonal: rational part failed to cancel");
  return ExactResistance{total.c, 0, total.b};
}

double asymptotic_r0(std::int64_t m, std::int64_t n) {
  if (m == 0 && n == 0)
    throw DomainError("asymptotic_r0 undefined at the origin");
  static const double euler_gamma = 0.57721566490153286;
  const double r2 = static_cast<double>(m) * static_cast<double>(m) +
                    static_cast<double>(n) * static_cast<double>(n);
  return (0.5 * std::log(r2) + euler_gamma + 0.5 * std::log(8.0)) / M_PI;
}

}  // namespace reslat
