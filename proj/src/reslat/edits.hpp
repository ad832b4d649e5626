#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "reslat/lattice.hpp"

namespace reslat {

/// Axis-aligned box in lattice index space, inclusive bounds.
struct IndexBox {
  std::int64_t m0 = 0, n0 = 0, m1 = -1, n1 = -1;

  bool empty() const { return m1 < m0 || n1 < n0; }
  bool contains(Site s) const {
    return s.m >= m0 && s.m <= m1 && s.n >= n0 && s.n <= n1;
  }
  void expand_to(Site s) {
    if (empty()) {
      m0 = m1 = s.m;
      n0 = n1 = s.n;
      return;
    }
    m0 = std::min(m0, s.m);
    m1 = std::max(m1, s.m);
    n0 = std::min(n0, s.n);
    n1 = std::max(n1, s.n);
  }
  void grow(std::int64_t pad) {
    m0 -= pad;
    n0 -= pad;
    m1 += pad;
    n1 += pad;
  }
};

/// One modified bond: beta_new is the new dimensionless conductance
/// (0 = removed), g = 1 - beta_new is the perturbation coefficient.
struct BondEdit {
  Bond bond;  // user orientation retained
  double beta_new = 0.0;
  double g = 1.0;

  bool removed() const { return beta_new == 0.0; }
};

/// Finite perturbation of a perfect lattice: an ordered list of bond
/// edits, unique under bond canonicalization.
class EditSet {
 public:
  explicit EditSet(LatticeKind kind) : kind_(kind) {}

  LatticeKind kind() const { return kind_; }
  const std::vector<BondEdit>& edits() const { return edits_; }
  std::size_t size() const { return edits_.size(); }
  bool empty() const { return edits_.empty(); }

  /// Append an edit.  Throws NotAdjacentError for non-neighbor sites,
  /// DomainError for beta outside [0, inf) or the no-op beta = 1, and
  /// DuplicateBondError when the undirected bond is already present.
  void add(Site u, Site v, double beta_new);
  void remove_bond(Site u, Site v) { add(u, v, 0.0); }

  bool contains(Site u, Site v) const;

  /// Edit with the given undirected bond, or nullptr.
  const BondEdit* find(Site u, Site v) const;

  /// Bounding box of all edit endpoints (empty box when no edits).
  IndexBox bounding_box() const;

 private:
  using Key = std::array<std::int64_t, 4>;
  static Key key_of(const Bond& canonical);

  LatticeKind kind_;
  std::vector<BondEdit> edits_;
  std::set<Key> keys_;
};

}  // namespace reslat
