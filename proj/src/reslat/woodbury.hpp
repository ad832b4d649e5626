#pragma once

#include <memory>
#include <vector>

#include "reslat/edits.hpp"
#include "reslat/exact.hpp"
#include "reslat/perfect.hpp"
#include "reslat/topology.hpp"

namespace reslat {

/// B turned out numerically singular: the removals disconnect the network.
/// Carries the graph-theoretic diagnosis alongside the numeric signal.
struct SingularBError : Error {
  SingularBError(double rcond_, DefectReport report_)
      : Error("matrix B is singular (reciprocal condition " +
              std::to_string(rcond_) + "): the network is disconnected"),
        rcond(rcond_),
        report(std::move(report_)) {}
  double rcond;
  DefectReport report;
};

/// <b_p|G0|b_q> = (1/2)[-R0(e_p,e_q) + R0(s_p,e_q) + R0(e_p,s_q) - R0(s_p,s_q)].
/// The combination is formed exactly in the resistance ring before
/// conversion; the individual R0 values grow huge with separation while the
/// element stays O(1).
ExactResistance bond_green_exact(const ResistanceProvider& provider,
                                 const Bond& p, const Bond& q);
double bond_green_element(const ResistanceProvider& provider, const Bond& p,
                          const Bond& q);

/// <i|G0|b_p> = (1/2)[-R0(i,e_p) + R0(i,s_p)]: component of the row vector
/// U^(i); its transpose is the column V^(i).
ExactResistance site_bond_green_exact(const ResistanceProvider& provider,
                                      Site i, const Bond& p);
double site_bond_green(const ResistanceProvider& provider, Site i,
                       const Bond& p);

/// Solved perturbation: B = C^{-1} - <alpha|G0|alpha> factorized once
/// (symmetric indefinite, Bunch-Kaufman), after which every two-point query
/// costs O(N^2).  Immutable and safe for concurrent queries.
class WoodburyFactorization {
 public:
  const EditSet& edit_set() const { return edits_; }
  std::size_t size() const { return edits_.size(); }
  /// Reciprocal condition number estimate of B from the factorization.
  double condition_estimate() const { return rcond_; }

  /// R(i,j) = R0(i,j) + (U^(i)-U^(j)) B^{-1} (V^(i)-V^(j))   [units of R]
  double perturbed_resistance(Site i, Site j) const;

  /// G(i,j) = <i|G0|j> + U^(i) B^{-1} V^(j) in the gauge G0(i,i) = 0, i.e.
  /// <i|G0|j> = -R0(i,j)/2   [units of 1/R]
  double perturbed_green_element(Site i, Site j) const;

  /// Solve B z = d with the stored factorization.
  std::vector<double> solve(const std::vector<double>& rhs) const;

  /// Row vector U^(i) over the edit bonds.
  std::vector<double> site_vector(Site i) const;

 private:
  friend WoodburyFactorization build_factorization(
      std::shared_ptr<const ResistanceProvider> provider,
      const EditSet& edits);

  std::shared_ptr<const ResistanceProvider> provider_;
  EditSet edits_{LatticeKind::Square};
  std::vector<double> factored_;  // N x N, column-major, dsytrf output
  std::vector<int> ipiv_;
  double rcond_ = 1.0;
};

/// Assembles <alpha|G0|alpha>, forms B = C^{-1} - <alpha|G0|alpha> with
/// C = diag(g_1..g_N), and factorizes it.  Throws SingularBError (with the
/// defect analysis attached) when the reciprocal condition estimate falls
/// below 1e-10, the signature of a topological defect.
WoodburyFactorization build_factorization(
    std::shared_ptr<const ResistanceProvider> provider, const EditSet& edits);

}  // namespace reslat
