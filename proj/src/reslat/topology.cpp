#include "reslat/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "reslat/errors.hpp"

namespace reslat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct BoxGrid {
  IndexBox box;
  std::int64_t width() const { return box.m1 - box.m0 + 1; }
  std::int64_t height() const { return box.n1 - box.n0 + 1; }
  std::size_t count() const {
    return static_cast<std::size_t>(width() * height());
  }
  int index(Site s) const {
    return static_cast<int>((s.n - box.n0) * width() + (s.m - box.m0));
  }
  Site site(std::size_t i) const {
    const std::int64_t w = width();
    return Site{box.m0 + static_cast<std::int64_t>(i) % w,
                box.n0 + static_cast<std::int64_t>(i) / w};
  }
  bool on_ring(Site s) const {
    return s.m == box.m0 || s.m == box.m1 || s.n == box.n0 || s.n == box.n1;
  }
};

}  // namespace

int DefectReport::component_of(Site s) const {
  if (grid.empty() || !affected_box.contains(s)) return 0;
  const BoxGrid g{affected_box};
  return grid[static_cast<std::size_t>(g.index(s))];
}

std::string DefectReport::to_json() const {
  std::ostringstream os;
  os << "{\"affected_box\":[" << affected_box.m0 << "," << affected_box.n0
     << "," << affected_box.m1 << "," << affected_box.n1 << "],";
  os << "\"components\":[";
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) os << ",";
    os << "{\"kind\":\"" << to_string(components[c].kind) << "\",\"sites\":[";
    for (std::size_t k = 0; k < components[c].sites.size(); ++k) {
      if (k) os << ",";
      os << "[" << components[c].sites[k].m << ","
         << components[c].sites[k].n << "]";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

DefectReport analyze(const EditSet& edits) {
  DefectReport report;
  report.affected_box = edits.bounding_box();
  if (report.affected_box.empty()) {
    report.components.push_back({ComponentKind::InfinitePart, {}});
    return report;
  }
  report.affected_box.grow(1);
  const BoxGrid g{report.affected_box};
  const std::size_t n_sites = g.count();
  const int virtual_node = static_cast<int>(n_sites);
  UnionFind uf(n_sites + 1);

  for (std::size_t i = 0; i < n_sites; ++i) {
    const Site s = g.site(i);
    if (g.on_ring(s)) uf.unite(static_cast<int>(i), virtual_node);
    for (const Site& d : neighbor_offsets(edits.kind())) {
      const Site t{s.m + d.m, s.n + d.n};
      if (!report.affected_box.contains(t)) continue;
      const BondEdit* e = edits.find(s, t);
      if (e != nullptr && e->removed()) continue;
      uf.unite(static_cast<int>(i), g.index(t));
    }
  }

  // Components in deterministic order: infinite part first, then by
  // smallest contained site.
  std::map<int, std::vector<Site>> groups;
  for (std::size_t i = 0; i < n_sites; ++i)
    groups[uf.find(static_cast<int>(i))].push_back(g.site(i));
  const int inf_root = uf.find(virtual_node);

  report.components.push_back({ComponentKind::InfinitePart, {}});
  report.grid.assign(n_sites, -1);
  std::vector<std::pair<Site, int>> finite_roots;
  for (auto& [root, sites] : groups) {
    if (root == inf_root) {
      std::sort(sites.begin(), sites.end());
      report.components[0].sites = sites;
      for (const Site& s : sites)
        report.grid[static_cast<std::size_t>(g.index(s))] = 0;
    } else {
      finite_roots.push_back({*std::min_element(sites.begin(), sites.end()), root});
    }
  }
  std::sort(finite_roots.begin(), finite_roots.end());
  for (const auto& [min_site, root] : finite_roots) {
    auto sites = groups[root];
    std::sort(sites.begin(), sites.end());
    DefectComponent comp;
    comp.kind = sites.size() == 1 ? ComponentKind::IsolatedSite
                                  : ComponentKind::Island;
    comp.sites = sites;
    const int id = static_cast<int>(report.components.size());
    for (const Site& s : sites)
      report.grid[static_cast<std::size_t>(g.index(s))] = id;
    report.components.push_back(std::move(comp));
  }
  return report;
}

QueryClass classify_query(const DefectReport& report, Site i, Site j) {
  const int ci = report.component_of(i);
  const int cj = report.component_of(j);
  if (ci == 0 && cj == 0) return QueryClass::InfiniteBoth;
  if (ci == cj) return QueryClass::SameIsland;
  return QueryClass::Disconnected;
}

namespace {

// Sort helper honoring the augmentation policy.
std::vector<Bond> ordered_bonds(LatticeKind kind, std::vector<Bond> bonds,
                                AugmentPolicy policy) {
  std::sort(bonds.begin(), bonds.end(),
            [&](const Bond& a, const Bond& b) { return bond_less(kind, a, b); });
  if (policy == AugmentPolicy::LexLargest)
    std::reverse(bonds.begin(), bonds.end());
  return bonds;
}

}  // namespace

Augmentation augment(const EditSet& edits, AugmentPolicy policy) {
  const LatticeKind kind = edits.kind();
  const DefectReport report = analyze(edits);
  Augmentation out{std::vector<Bond>{}, EditSet(kind)};
  if (!report.has_defects()) {
    out.reduced = edits;
    return out;
  }

  const std::size_t n_comp = report.components.size();
  // Working connectivity on the component contraction.
  UnionFind uf(n_comp);

  // Group isolated-site components into lakes (clusters of isolated sites
  // that are lattice neighbors; their mutual bonds are necessarily removed).
  std::vector<int> lake_of(n_comp, -1);
  std::vector<std::vector<int>> lakes;
  for (std::size_t c = 1; c < n_comp; ++c) {
    if (report.components[c].kind != ComponentKind::IsolatedSite) continue;
    if (lake_of[c] >= 0) continue;
    const int lake_id = static_cast<int>(lakes.size());
    lakes.push_back({});
    std::vector<int> stack = {static_cast<int>(c)};
    lake_of[c] = lake_id;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      lakes[static_cast<std::size_t>(lake_id)].push_back(cur);
      const Site s = report.components[static_cast<std::size_t>(cur)].sites[0];
      for (const Site& d : neighbor_offsets(kind)) {
        const Site t{s.m + d.m, s.n + d.n};
        const int ct = report.component_of(t);
        if (ct <= 0 || lake_of[static_cast<std::size_t>(ct)] >= 0) continue;
        if (report.components[static_cast<std::size_t>(ct)].kind !=
            ComponentKind::IsolatedSite)
          continue;
        lake_of[static_cast<std::size_t>(ct)] = lake_id;
        stack.push_back(ct);
      }
    }
  }

  // All removable-restorable candidates.
  std::vector<Bond> removed;
  for (const BondEdit& e : edits.edits())
    if (e.removed()) removed.push_back(canonical(kind, e.bond));
  removed = ordered_bonds(kind, removed, policy);

  std::set<std::array<std::int64_t, 4>> restored_keys;
  auto restore = [&](const Bond& b) {
    out.restored_bonds.push_back(b);
    restored_keys.insert({b.start.m, b.start.n, b.end.m, b.end.n});
  };

  // Thread each lake first: spanning tree over its sites plus exactly one
  // perimeter attachment once something adjacent is connected to infinity.
  for (std::size_t l = 0; l < lakes.size(); ++l) {
    for (const Bond& b : removed) {
      const int ca = report.component_of(b.start);
      const int cb = report.component_of(b.end);
      if (ca == cb) continue;
      const bool a_in = ca > 0 && lake_of[static_cast<std::size_t>(ca)] ==
                                      static_cast<int>(l);
      const bool b_in = cb > 0 && lake_of[static_cast<std::size_t>(cb)] ==
                                      static_cast<int>(l);
      if (a_in && b_in && uf.find(ca) != uf.find(cb)) {
        restore(b);
        uf.unite(ca, cb);
      }
    }
  }

  // Attach lakes and bridge islands to the growing infinite region.  Nested
  // structures connect in later passes once their surroundings are linked.
  bool progress = true;
  auto all_connected = [&]() {
    for (std::size_t c = 1; c < n_comp; ++c)
      if (uf.find(static_cast<int>(c)) != uf.find(0)) return false;
    return true;
  };
  while (!all_connected() && progress) {
    progress = false;
    // One attachment per not-yet-connected lake.
    for (std::size_t l = 0; l < lakes.size(); ++l) {
      if (uf.find(lakes[l][0]) == uf.find(0)) continue;
      for (const Bond& b : removed) {
        if (restored_keys.count({b.start.m, b.start.n, b.end.m, b.end.n}))
          continue;
        const int ca = report.component_of(b.start);
        const int cb = report.component_of(b.end);
        const bool a_in = ca > 0 && lake_of[static_cast<std::size_t>(ca)] ==
                                        static_cast<int>(l);
        const bool b_in = cb > 0 && lake_of[static_cast<std::size_t>(cb)] ==
                                        static_cast<int>(l);
        if (a_in == b_in) continue;
        const int other = a_in ? cb : ca;
        if (uf.find(other) != uf.find(0)) continue;
        restore(b);
        uf.unite(ca, cb);
        progress = true;
        break;
      }
    }
    // One bridge per not-yet-connected island.
    for (std::size_t c = 1; c < n_comp; ++c) {
      if (report.components[c].kind != ComponentKind::Island) continue;
      if (uf.find(static_cast<int>(c)) == uf.find(0)) continue;
      for (const Bond& b : removed) {
        if (restored_keys.count({b.start.m, b.start.n, b.end.m, b.end.n}))
          continue;
        const int ca = report.component_of(b.start);
        const int cb = report.component_of(b.end);
        if (ca != static_cast<int>(c) && cb != static_cast<int>(c)) continue;
        const int other = ca == static_cast<int>(c) ? cb : ca;
        if (other == static_cast<int>(c)) continue;
        if (uf.find(other) != uf.find(0)) continue;
        restore(b);
        uf.unite(ca, cb);
        progress = true;
        break;
      }
    }
  }
  if (!all_connected())
    throw AugmentationImpossibleError(
        "no removed bond reconnects some component to the infinite part");

  for (const BondEdit& e : edits.edits()) {
    const Bond c = canonical(kind, e.bond);
    if (e.removed() &&
        restored_keys.count({c.start.m, c.start.n, c.end.m, c.end.n}))
      continue;
    out.reduced.add(e.bond.start, e.bond.end, e.beta_new);
  }
  return out;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::InfinitePart: return "infinite";
    case ComponentKind::Island: return "island";
    case ComponentKind::IsolatedSite: return "isolated-site";
  }
  return "?";
}

const char* to_string(QueryClass cls) {
  switch (cls) {
    case QueryClass::SameIsland: return "same-island";
    case QueryClass::Disconnected: return "disconnected";
    case QueryClass::InfiniteBoth: return "infinite";
  }
  return "?";
}

}  // namespace reslat
