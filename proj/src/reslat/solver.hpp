#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "reslat/currents.hpp"
#include "reslat/finite.hpp"
#include "reslat/woodbury.hpp"

namespace reslat {

struct SolveResult {
  QueryClass cls = QueryClass::InfiniteBoth;
  double resistance = 0.0;  // +inf for disconnected pairs
};

/// Front door for perturbed-lattice queries.  Classifies each site pair
/// against the defect report of the raw edit set, then routes: same island
/// -> finite network solve, different components -> infinite resistance,
/// both in the infinite part -> Woodbury on the (optionally augmented)
/// edits.
class Solver {
 public:
  Solver(std::shared_ptr<const ResistanceProvider> provider, EditSet edits,
         bool auto_augment = true);

  LatticeKind kind() const { return edits_.kind(); }
  const ResistanceProvider& provider() const { return *provider_; }
  const EditSet& edits() const { return edits_; }
  const DefectReport& report() const { return report_; }
  bool auto_augment() const { return auto_augment_; }

  /// Bonds restored by augmentation (empty when there were no defects or
  /// auto-augmentation is off).
  const std::vector<Bond>& restored_bonds() const { return restored_; }
  /// Edits actually handed to the Woodbury engine.
  const EditSet& effective_edits() const { return effective_; }

  SolveResult resistance(Site i, Site j) const;
  double perfect_resistance(Site i, Site j) const;

  /// Perturbed Green element via the Woodbury factorization (both sites
  /// treated as part of the augmented, connected network).
  double green_element(Site i, Site j) const;

  /// Current distribution of the augmented network over a window.
  CurrentMap currents(Site i, Site j, IndexBox window, double I0) const;

  /// The underlying factorization; building it raises SingularBError when
  /// augmentation is disabled and the edits disconnect the lattice.
  const WoodburyFactorization& factorization() const;

 private:
  double island_resistance(int component, Site i, Site j) const;

  std::shared_ptr<const ResistanceProvider> provider_;
  EditSet edits_;
  bool auto_augment_;
  DefectReport report_;
  std::vector<Bond> restored_;
  EditSet effective_;

  mutable std::optional<WoodburyFactorization> fact_;
  mutable std::map<int, std::unique_ptr<FiniteNetwork>> islands_;
  mutable std::mutex mutex_;
};

}  // namespace reslat
