#include "reslat/edits.hpp"

#include <cmath>

#include "reslat/errors.hpp"

namespace reslat {

EditSet::Key EditSet::key_of(const Bond& c) {
  return {c.start.m, c.start.n, c.end.m, c.end.n};
}

void EditSet::add(Site u, Site v, double beta_new) {
  const Bond c = canonical_bond(kind_, u, v);
  if (!(beta_new >= 0.0) || !std::isfinite(beta_new))
    throw DomainError("bond conductance must be finite and >= 0");
  if (beta_new == 1.0)
    throw DomainError("no-op edit: beta = 1 leaves the bond unchanged");
  const Key key = key_of(c);
  if (keys_.count(key))
    throw DuplicateBondError("duplicate bond in edit set", edits_.size());
  keys_.insert(key);
  edits_.push_back(BondEdit{Bond{u, v, beta_new}, beta_new, 1.0 - beta_new});
}

bool EditSet::contains(Site u, Site v) const {
  return keys_.count(key_of(canonical_bond(kind_, u, v))) != 0;
}

const BondEdit* EditSet::find(Site u, Site v) const {
  const Bond c = canonical_bond(kind_, u, v);
  if (!keys_.count(key_of(c))) return nullptr;
  for (const BondEdit& e : edits_)
    if (same_undirected(kind_, e.bond, c)) return &e;
  return nullptr;
}

IndexBox EditSet::bounding_box() const {
  IndexBox box;
  for (const BondEdit& e : edits_) {
    box.expand_to(e.bond.start);
    box.expand_to(e.bond.end);
  }
  return box;
}

}  // namespace reslat
