#include "reslat/currents.hpp"

#include <cmath>
#include <future>
#include <unordered_map>

#include "reslat/errors.hpp"

namespace reslat {

double bond_current(LatticeKind kind, const ResistanceFn& resistance, Site x,
                    Site y, Site i, Site j, double gamma_xy, double I0) {
  if (!are_adjacent(kind, x, y))
    throw NotAdjacentError("bond_current requires adjacent bond endpoints");
  return -0.5 * I0 * gamma_xy *
         (resistance(i, x) - resistance(i, y) - resistance(j, x) +
          resistance(j, y));
}

CurrentMap current_map(LatticeKind kind, const ResistanceFn& resistance,
                       const BondInfoFn& bond_info, Site i, Site j,
                       IndexBox window, double I0) {
  if (!window.contains(i) || !window.contains(j))
    throw DomainError("current window must contain both query sites");

  CurrentMap map;
  map.source = i;
  map.sink = j;
  map.injected = I0;
  map.window = window;

  const std::int64_t w = window.m1 - window.m0 + 1;
  const std::int64_t h = window.n1 - window.n0 + 1;
  const std::size_t count = static_cast<std::size_t>(w * h);
  const auto site_at = [&](std::size_t idx) {
    return Site{window.m0 + static_cast<std::int64_t>(idx) % w,
                window.n0 + static_cast<std::int64_t>(idx) / w};
  };
  const auto index_of = [&](Site s) {
    return static_cast<std::size_t>((s.n - window.n0) * w + (s.m - window.m0));
  };

  // Memoized R(i, .) and R(j, .) over the window; chunks fan out across a
  // few workers, each writing a disjoint slice.
  std::vector<double> r_i(count), r_j(count);
  {
    const unsigned workers =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
        for (std::size_t k = lo; k < hi; ++k) {
          const Site s = site_at(k);
          r_i[k] = resistance(i, s);
          r_j[k] = resistance(j, s);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  // Forward offsets visit each window bond once, row-major deterministic.
  static const std::vector<Site> square_fwd = {{1, 0}, {0, 1}};
  static const std::vector<Site> tri_fwd = {{1, 0}, {0, 1}, {1, -1}};
  const auto& fwd = kind == LatticeKind::Square ? square_fwd : tri_fwd;

  std::vector<double> net_flow(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    const Site s = site_at(k);
    for (const Site& d : fwd) {
      const Site t{s.m + d.m, s.n + d.n};
      if (!window.contains(t)) continue;
      const Bond b = canonical_bond(kind, s, t);
      const auto [gamma, restored] = bond_info(b);
      if (gamma <= 0.0) continue;
      const std::size_t kt = index_of(t);
      const double current =
          -0.5 * I0 * gamma * (r_i[k] - r_i[kt] - r_j[k] + r_j[kt]);
      Bond oriented = b;
      oriented.beta = gamma;
      map.entries.push_back(CurrentEntry{oriented, current, gamma, restored});
      net_flow[index_of(b.start)] += current;
      net_flow[index_of(b.end)] -= current;
    }
  }

  // Kirchhoff conservation at interior nodes (window-boundary nodes carry
  // flux across the window edge and are exempt).
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const Site s = site_at(k);
    bool interior = true;
    for (const Site& d : neighbor_offsets(kind))
      if (!window.contains({s.m + d.m, s.n + d.n})) {
        interior = false;
        break;
      }
    if (!interior) continue;
    double expected = 0.0;
    if (s == i) expected += I0;
    if (s == j) expected -= I0;
    worst = std::max(worst, std::abs(net_flow[k] - expected));
  }
  map.conservation_residual = std::abs(I0) > 0 ? worst / std::abs(I0) : worst;
  if (map.conservation_residual > 1e-9)
    throw ConservationError("current map violates node conservation: residual " +
                            std::to_string(map.conservation_residual) +
                            " * I0");
  return map;
}

}  // namespace reslat
