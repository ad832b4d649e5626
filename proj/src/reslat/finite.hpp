#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "reslat/edits.hpp"

namespace reslat {

/// Finite resistor network solved through the modified Laplacian
/// L' = L + f@f (f the all-ones vector).  L itself is singular with kernel
/// f; shifting the f eigenvalue to M makes L' invertible and the solution
/// acquires the zero-average-potential gauge, so G = -(L')^{-1} plugs
/// straight into R_ij = G_ii + G_jj - 2 G_ij.
class FiniteNetwork {
 public:
  FiniteNetwork(std::vector<Site> nodes,
                std::vector<std::array<std::int64_t, 2>> edges,
                std::vector<double> conductances);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Site>& nodes() const { return nodes_; }
  int index_of(Site s) const;  // -1 when absent
  bool connected() const { return n_components_ == 1; }
  std::size_t component_count() const { return n_components_; }

  /// Dense Green matrix -(L')^{-1}.  Computed on first use; only sensible
  /// for a few thousand nodes.  Throws DisconnectedNetworkError.
  const Eigen::MatrixXd& green() const;

  /// Two-point resistance.  Dense route through the Green matrix for small
  /// networks; conjugate-gradient solve with the f-deflated operator for
  /// large ones.  Throws DisconnectedNetworkError.
  double resistance(int i, int j) const;

  /// Node potentials for current I0 injected at i and extracted at j, in
  /// the zero-average gauge.
  Eigen::VectorXd potentials(int i, int j, double I0) const;

  /// Dense modified Laplacian L' (built on demand; test hook).
  Eigen::MatrixXd modified_laplacian() const;

 private:
  void require_connected() const;
  Eigen::VectorXd solve_deflated(const Eigen::VectorXd& b) const;

  std::vector<Site> nodes_;
  std::vector<std::array<std::int64_t, 2>> edges_;
  std::vector<double> conductances_;
  std::size_t n_components_ = 0;
  std::vector<int> component_;

  mutable std::unique_ptr<Eigen::MatrixXd> green_;
};

double finite_resistance(const FiniteNetwork& net, int i, int j);

/// Free-boundary window |m|,|n| <= half_width of the (edited) lattice.
/// Throws WindowTooSmallError when an edit endpoint falls outside.
FiniteNetwork truncate_lattice(LatticeKind kind, const EditSet& edits,
                               std::int64_t half_width);

}  // namespace reslat
