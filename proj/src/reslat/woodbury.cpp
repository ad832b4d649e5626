#include "reslat/woodbury.hpp"

#include <lapacke.h>

#include <cmath>

namespace reslat {

ExactResistance bond_green_exact(const ResistanceProvider& provider,
                                 const Bond& p, const Bond& q) {
  ExactResistance acc = provider.r0_exact(p.start, q.end);
  acc += provider.r0_exact(p.end, q.start);
  acc -= provider.r0_exact(p.end, q.end);
  acc -= provider.r0_exact(p.start, q.start);
  acc *= mpq_class(1, 2);
  return acc;
}

double bond_green_element(const ResistanceProvider& provider, const Bond& p,
                          const Bond& q) {
  return bond_green_exact(provider, p, q).to_double();
}

ExactResistance site_bond_green_exact(const ResistanceProvider& provider,
                                      Site i, const Bond& p) {
  ExactResistance acc = provider.r0_exact(i, p.start);
  acc -= provider.r0_exact(i, p.end);
  acc *= mpq_class(1, 2);
  return acc;
}

double site_bond_green(const ResistanceProvider& provider, Site i,
                       const Bond& p) {
  return site_bond_green_exact(provider, i, p).to_double();
}

WoodburyFactorization build_factorization(
    std::shared_ptr<const ResistanceProvider> provider, const EditSet& edits) {
  WoodburyFactorization fact;
  fact.provider_ = std::move(provider);
  fact.edits_ = edits;
  const int n = static_cast<int>(edits.size());
  if (n == 0) return fact;

  const auto& list = edits.edits();
  std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      const double gpq =
          bond_green_element(*fact.provider_, list[p].bond, list[q].bond);
      double value = -gpq;
      if (p == q) value += 1.0 / list[p].g;
      b[static_cast<std::size_t>(q) * n + p] = value;
      b[static_cast<std::size_t>(p) * n + q] = value;
    }
  }

  // 1-norm before factorization, needed by the condition estimator.
  double anorm = 0.0;
  for (int col = 0; col < n; ++col) {
    double sum = 0.0;
    for (int row = 0; row < n; ++row)
      sum += std::abs(b[static_cast<std::size_t>(col) * n + row]);
    anorm = std::max(anorm, sum);
  }

  fact.factored_ = b;
  fact.ipiv_.resize(static_cast<std::size_t>(n));
  const int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n,
                                  fact.factored_.data(), n, fact.ipiv_.data());
  double rcond = 0.0;
  if (info == 0) {
    LAPACKE_dsycon(LAPACK_COL_MAJOR, 'L', n, fact.factored_.data(), n,
                   fact.ipiv_.data(), anorm, &rcond);
  }
  fact.rcond_ = rcond;
  if (info != 0 || rcond < 1e-10)
    throw SingularBError(rcond, analyze(edits));
  return fact;
}

std::vector<double> WoodburyFactorization::solve(
    const std::vector<double>& rhs) const {
  const int n = static_cast<int>(size());
  std::vector<double> x = rhs;
  if (n == 0) return x;
  LAPACKE_dsytrs(LAPACK_COL_MAJOR, 'L', n, 1, factored_.data(), n,
                 ipiv_.data(), x.data(), n);
  return x;
}

std::vector<double> WoodburyFactorization::site_vector(Site i) const {
  std::vector<double> u(size());
  const auto& list = edits_.edits();
  for (std::size_t p = 0; p < u.size(); ++p)
    u[p] = site_bond_green(*provider_, i, list[p].bond);
  return u;
}

double WoodburyFactorization::perturbed_resistance(Site i, Site j) const {
  if (i == j) return 0.0;
  const double r0 = provider_->r0(i, j);
  if (size() == 0) return r0;
  const auto& list = edits_.edits();
  std::vector<double> d(size());
  for (std::size_t p = 0; p < d.size(); ++p) {
    // U^(i)_p - U^(j)_p, combined exactly before conversion.
    ExactResistance acc = provider_->r0_exact(i, list[p].bond.start);
    acc -= provider_->r0_exact(i, list[p].bond.end);
    acc -= provider_->r0_exact(j, list[p].bond.start);
    acc += provider_->r0_exact(j, list[p].bond.end);
    acc *= mpq_class(1, 2);
    d[p] = acc.to_double();
  }
  const std::vector<double> z = solve(d);
  double corr = 0.0;
  for (std::size_t p = 0; p < d.size(); ++p) corr += d[p] * z[p];
  return r0 + corr;
}

double WoodburyFactorization::perturbed_green_element(Site i, Site j) const {
  const double g0 = -0.5 * provider_->r0(i, j);
  if (size() == 0) return g0;
  const std::vector<double> ui = site_vector(i);
  const std::vector<double> vj = site_vector(j);
  const std::vector<double> z = solve(vj);
  double corr = 0.0;
  for (std::size_t p = 0; p < ui.size(); ++p) corr += ui[p] * z[p];
  return g0 + corr;
}

}  // namespace reslat
