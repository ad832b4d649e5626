#include "reslat/lattice.hpp"

#include <cmath>
#include <tuple>

namespace reslat {

int coordination(LatticeKind kind) {
  return kind == LatticeKind::Square ? 4 : 6;
}

const std::vector<Site>& neighbor_offsets(LatticeKind kind) {
  static const std::vector<Site> square = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static const std::vector<Site> triangular = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  return kind == LatticeKind::Square ? square : triangular;
}

std::vector<Site> neighbors(LatticeKind kind, Site s) {
  std::vector<Site> out;
  const auto& offsets = neighbor_offsets(kind);
  out.reserve(offsets.size());
  for (const Site& d : offsets) out.push_back({s.m + d.m, s.n + d.n});
  return out;
}

bool are_adjacent(LatticeKind kind, Site u, Site v) {
  const Site d{v.m - u.m, v.n - u.n};
  for (const Site& o : neighbor_offsets(kind))
    if (o == d) return true;
  return false;
}

Vec2 embed(LatticeKind kind, Site s) {
  if (kind == LatticeKind::Square)
    return {static_cast<double>(s.m), static_cast<double>(s.n)};
  static const double root3_half = std::sqrt(3.0) / 2.0;
  return {static_cast<double>(s.m) + 0.5 * static_cast<double>(s.n),
          root3_half * static_cast<double>(s.n)};
}

namespace {

// Embedded coordinates are half-integer multiples of 1 and sqrt(3)/2, so
// lexicographic comparison in doubles is exact for any practical range.
std::tuple<double, double> embed_key(LatticeKind kind, Site s) {
  const Vec2 p = embed(kind, s);
  return {p.x, p.y};
}

}  // namespace

Bond canonical_bond(LatticeKind kind, Site u, Site v) {
  if (!are_adjacent(kind, u, v))
    throw NotAdjacentError("sites (" + std::to_string(u.m) + "," +
                           std::to_string(u.n) + ") and (" +
                           std::to_string(v.m) + "," + std::to_string(v.n) +
                           ") are not nearest neighbors");
  if (embed_key(kind, v) < embed_key(kind, u)) std::swap(u, v);
  return Bond{u, v, 1.0};
}

Bond canonical(LatticeKind kind, const Bond& b) {
  Bond c = canonical_bond(kind, b.start, b.end);
  c.beta = b.beta;
  return c;
}

bool same_undirected(LatticeKind kind, const Bond& a, const Bond& b) {
  const Bond ca = canonical_bond(kind, a.start, a.end);
  const Bond cb = canonical_bond(kind, b.start, b.end);
  return ca.start == cb.start && ca.end == cb.end;
}

bool bond_less(LatticeKind kind, const Bond& a, const Bond& b) {
  const Bond ca = canonical_bond(kind, a.start, a.end);
  const Bond cb = canonical_bond(kind, b.start, b.end);
  const auto ka = std::tuple_cat(embed_key(kind, ca.start), embed_key(kind, ca.end));
  const auto kb = std::tuple_cat(embed_key(kind, cb.start), embed_key(kind, cb.end));
  return ka < kb;
}

}  // namespace reslat
