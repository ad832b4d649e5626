#pragma once

#include <string>
#include <vector>

#include "reslat/edits.hpp"

namespace reslat {

enum class ComponentKind { InfinitePart, Island, IsolatedSite };

struct DefectComponent {
  ComponentKind kind = ComponentKind::InfinitePart;
  std::vector<Site> sites;  // sorted; for InfinitePart only the in-box sites
};

/// Connectivity analysis of the lattice after removals.  Sites are examined
/// inside the bounding box of all edit endpoints expanded by one ring; a
/// virtual node attached to the whole boundary ring stands in for the rest
/// of the infinite lattice, so any component not touching the ring is
/// finite.
struct DefectReport {
  IndexBox affected_box;
  std::vector<DefectComponent> components;  // InfinitePart first

  bool has_defects() const { return components.size() > 1; }
  /// Component index of a site; sites outside the box are in the infinite
  /// part (index 0).
  int component_of(Site s) const;
  std::string to_json() const;

  // box-indexed component ids (implementation detail shared with augment)
  std::vector<int> grid;
};

enum class QueryClass { SameIsland, Disconnected, InfiniteBoth };

DefectReport analyze(const EditSet& edits);

QueryClass classify_query(const DefectReport& report, Site i, Site j);

/// Deterministic bond choice when several augmentations are valid.  The
/// alternative policy exists so tests can confirm placement independence.
enum class AugmentPolicy { LexSmallest, LexLargest };

struct Augmentation {
  std::vector<Bond> restored_bonds;  // removed from the edit set
  EditSet reduced;
};

/// Restores a minimal set of removed bonds so every island hangs from one
/// bridge and every lake is threaded by dangling bonds with a single
/// perimeter attachment.  Each restored bond is a cut edge of the final
/// graph, so it carries no current when source and sink are in the infinite
/// part, and the two-point resistance there is unchanged.
Augmentation augment(const EditSet& edits,
                     AugmentPolicy policy = AugmentPolicy::LexSmallest);

const char* to_string(ComponentKind kind);
const char* to_string(QueryClass cls);

}  // namespace reslat
