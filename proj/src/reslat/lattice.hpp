#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

enum class LatticeKind { Square, Triangular };

/// Coordination number: 4 for the square lattice, 6 for the triangular one.
int coordination(LatticeKind kind);

/// Lattice site given by integer coefficients (m, n) of the primitive
/// vectors a1, a2.  Square: orthonormal basis.  Triangular: a1, a2 at 60
/// degrees, so the six nearest-neighbor offsets are
/// (+-1,0), (0,+-1), (+1,-1), (-1,+1).
struct Site {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
};

/// 2-D Cartesian point used for rendering.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Directed bond between nearest neighbors.  The orientation (start -> end)
/// matters for Green-element signs; undirected identity is obtained through
/// canonical().
struct Bond {
  Site start;
  Site end;
  double beta = 1.0;  // dimensionless conductance, 1 in the perfect lattice

  friend auto operator<=>(const Bond&, const Bond&) = default;
};

/// Nearest-neighbor offsets of the given lattice kind.
const std::vector<Site>& neighbor_offsets(LatticeKind kind);

/// All nearest neighbors of s.
std::vector<Site> neighbors(LatticeKind kind, Site s);

bool are_adjacent(LatticeKind kind, Site u, Site v);

/// Embedding into Cartesian coordinates: square (m, n); triangular
/// (m + n/2, n*sqrt(3)/2).
Vec2 embed(LatticeKind kind, Site s);

/// Undirected canonical representative of the bond {u, v}: the endpoint
/// with smaller embedded (x, y) becomes the start.  Throws NotAdjacentError
/// when u and v are not nearest neighbors.
Bond canonical_bond(LatticeKind kind, Site u, Site v);

/// Canonicalize an existing bond, keeping its conductance.
Bond canonical(LatticeKind kind, const Bond& b);

/// True when the two bonds connect the same unordered site pair.
bool same_undirected(LatticeKind kind, const Bond& a, const Bond& b);

/// Total order on canonical bonds (lexicographic on embedded coordinates of
/// start then end).  Used wherever a deterministic bond choice is required.
bool bond_less(LatticeKind kind, const Bond& a, const Bond& b);

}  // namespace reslat
