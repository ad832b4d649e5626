#pragma once

#include <functional>
#include <vector>

#include "reslat/edits.hpp"

namespace reslat {

/// Two-point resistance callback, perfect or perturbed.
using ResistanceFn = std::function<double(Site, Site)>;

/// Current flowing x -> y through a bond of conductance gamma_xy when I0
/// enters at i and exits at j:
///   I = -(I0 gamma / 2) [R(i,x) - R(i,y) - R(j,x) + R(j,y)].
/// Negative value means the flow direction is y -> x.
double bond_current(LatticeKind kind, const ResistanceFn& resistance, Site x,
                    Site y, Site i, Site j, double gamma_xy, double I0);

struct CurrentEntry {
  Bond bond;       // canonical orientation; current is signed start -> end
  double current;
  double gamma;
  bool restored;   // bridge or dangling bond added by augmentation
};

struct CurrentMap {
  Site source;
  Site sink;
  double injected = 1.0;
  IndexBox window;
  std::vector<CurrentEntry> entries;
  /// Largest Kirchhoff residual over interior window nodes, in units of I0.
  double conservation_residual = 0.0;
};

/// Per-bond description inside the window: conductance (0 = removed, bond
/// omitted) and whether the bond was restored by augmentation.
using BondInfoFn = std::function<std::pair<double, bool>(const Bond&)>;

/// Currents of every intact bond in the window.  Resistance values against
/// the two base points are computed once per window site (O(2 W H)
/// queries).  Verifies Kirchhoff conservation at interior nodes to
/// 1e-9 * I0 and throws ConservationError past that.
CurrentMap current_map(LatticeKind kind, const ResistanceFn& resistance,
                       const BondInfoFn& bond_info, Site i, Site j,
                       IndexBox window, double I0);

}  // namespace reslat
