#include "reslat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "reslat/errors.hpp"

namespace reslat {

Solver::Solver(std::shared_ptr<const ResistanceProvider> provider,
               EditSet edits, bool auto_augment)
    : provider_(std::move(provider)),
      edits_(std::move(edits)),
      auto_augment_(auto_augment),
      report_(analyze(edits_)),
      effective_(edits_.kind()) {
  if (provider_->kind() != edits_.kind())
    throw DomainError("edit set and provider lattice kinds differ");
  if (auto_augment_ && report_.has_defects()) {
    Augmentation aug = augment(edits_);
    restored_ = std::move(aug.restored_bonds);
    effective_ = std::move(aug.reduced);
  } else {
    effective_ = edits_;
  }
}

const WoodburyFactorization& Solver::factorization() const {
  std::lock_guard lock(mutex_);
  if (!fact_) fact_ = build_factorization(provider_, effective_);
  return *fact_;
}

double Solver::perfect_resistance(Site i, Site j) const {
  return provider_->r0(i, j);
}

double Solver::island_resistance(int component, Site i, Site j) const {
  std::unique_lock lock(mutex_);
  auto it = islands_.find(component);
  if (it == islands_.end()) {
    // Finite network of the component's sites with every intact bond among
    // them (removed bonds excluded, replaced conductances kept).
    const auto& sites = report_.components[static_cast<std::size_t>(component)].sites;
    std::vector<std::array<std::int64_t, 2>> edges;
    std::vector<double> conductances;
    const auto idx = [&](Site s) -> std::int64_t {
      const auto pos = std::lower_bound(sites.begin(), sites.end(), s);
      if (pos == sites.end() || !(*pos == s)) return -1;
      return pos - sites.begin();
    };
    for (std::size_t a = 0; a < sites.size(); ++a) {
      for (const Site& d : neighbor_offsets(kind())) {
        const Site t{sites[a].m + d.m, sites[a].n + d.n};
        const std::int64_t b = idx(t);
        if (b < 0 || b <= static_cast<std::int64_t>(a)) continue;
        double beta = 1.0;
        if (const BondEdit* e = edits_.find(sites[a], t)) beta = e->beta_new;
        if (beta <= 0.0) continue;
        edges.push_back({static_cast<std::int64_t>(a), b});
        conductances.push_back(beta);
      }
    }
    it = islands_
             .emplace(component, std::make_unique<FiniteNetwork>(
                                     std::vector<Site>(sites), std::move(edges),
                                     std::move(conductances)))
             .first;
  }
  FiniteNetwork* net = it->second.get();
  return net->resistance(net->index_of(i), net->index_of(j));
}

SolveResult Solver::resistance(Site i, Site j) const {
  const QueryClass cls = classify_query(report_, i, j);
  if (i == j) return {cls, 0.0};
  switch (cls) {
    case QueryClass::Disconnected:
      return {cls, std::numeric_limits<double>::infinity()};
    case QueryClass::SameIsland:
      return {cls, island_resistance(report_.component_of(i), i, j)};
    case QueryClass::InfiniteBoth:
      break;
  }
  return {cls, factorization().perturbed_resistance(i, j)};
}

double Solver::green_element(Site i, Site j) const {
  return factorization().perturbed_green_element(i, j);
}

CurrentMap Solver::currents(Site i, Site j, IndexBox window, double I0) const {
  const WoodburyFactorization& fact = factorization();
  const ResistanceFn resistance = [&fact](Site a, Site b) {
    return fact.perturbed_resistance(a, b);
  };
  // Conductance of a window bond in the augmented network.
  const BondInfoFn bond_info = [this](const Bond& b) -> std::pair<double, bool> {
    for (const Bond& r : restored_)
      if (r.start == b.start && r.end == b.end) return {1.0, true};
    if (const BondEdit* e = effective_.find(b.start, b.end))
      return {e->beta_new, false};
    return {1.0, false};
  };
  // Pre-warm the provider so parallel map assembly only reads the cache.
  const auto mag = [](std::int64_t v) { return v < 0 ? -v : v; };
  std::int64_t reach = 0;
  for (Site s : {Site{window.m0, window.n0}, Site{window.m1, window.n1},
                 Site{window.m0, window.n1}, Site{window.m1, window.n0}, i, j})
    reach = std::max({reach, mag(s.m), mag(s.n)});
  const IndexBox ebox = effective_.bounding_box();
  if (!ebox.empty())
    reach += std::max({mag(ebox.m0), mag(ebox.n0), mag(ebox.m1), mag(ebox.n1)});
  provider_->ensure_range(2 * reach + 2);
  return current_map(kind(), resistance, bond_info, i, j, window, I0);
}

}  // namespace reslat
