#include "reslat.h"

#include <cstring>
#include <limits>
#include <memory>
#include <string>

#include "reslat/quadrature.hpp"
#include "reslat/solver.hpp"

namespace {

thread_local std::string g_last_error;

rl_status fail(rl_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

rl_status from_exception() {
  try {
    throw;
  } catch (const reslat::NotAdjacentError& e) {
    return fail(RL_ERR_NOT_ADJACENT, e.what());
  } catch (const reslat::DuplicateBondError& e) {
    return fail(RL_ERR_DUPLICATE_BOND, e.what());
  } catch (const reslat::SingularBError& e) {
    g_last_error = std::string(e.what()) + "\n" + e.report.to_json();
    return RL_ERR_SINGULAR;
  } catch (const reslat::DisconnectedNetworkError& e) {
    return fail(RL_ERR_DISCONNECTED, e.what());
  } catch (const reslat::WindowTooSmallError& e) {
    return fail(RL_ERR_WINDOW, e.what());
  } catch (const reslat::ConvergenceFailure& e) {
    return fail(RL_ERR_CONVERGENCE, e.what());
  } catch (const reslat::RangeError& e) {
    return fail(RL_ERR_RANGE, e.what());
  } catch (const reslat::ConservationError& e) {
    return fail(RL_ERR_CONSERVATION, e.what());
  } catch (const reslat::AugmentationImpossibleError& e) {
    return fail(RL_ERR_AUGMENTATION, e.what());
  } catch (const reslat::DomainError& e) {
    return fail(RL_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RL_ERR_INTERNAL, "unknown error");
  }
}

reslat::LatticeKind to_kind(rl_lattice_kind k) {
  return k == RL_LATTICE_SQUARE ? reslat::LatticeKind::Square
                                : reslat::LatticeKind::Triangular;
}

void copy_str(const std::string& s, char* buf, size_t len) {
  if (buf == nullptr || len == 0) return;
  std::strncpy(buf, s.c_str(), len - 1);
  buf[len - 1] = '\0';
}

}  // namespace

struct rl_provider {
  std::shared_ptr<reslat::ResistanceProvider> impl;
};
struct rl_editset {
  reslat::EditSet impl{reslat::LatticeKind::Square};
};
struct rl_solver {
  std::unique_ptr<reslat::Solver> impl;
};
struct rl_current_map {
  reslat::CurrentMap impl;
};
struct rl_finite {
  std::vector<reslat::Site> nodes;
  std::vector<std::array<std::int64_t, 2>> edges;
  std::vector<double> conductances;
  std::unique_ptr<reslat::FiniteNetwork> net;  // rebuilt after edits

  reslat::FiniteNetwork& network() {
    if (!net)
      net = std::make_unique<reslat::FiniteNetwork>(nodes, edges, conductances);
    return *net;
  }
};

extern "C" {

const char* rl_version(void) { return "1.0.0"; }

const char* rl_last_error(void) { return g_last_error.c_str(); }

void rl_string_free(char* s) { std::free(s); }

rl_provider* rl_provider_new(rl_lattice_kind kind) {
  auto* p = new rl_provider;
  p->impl = std::make_shared<reslat::ResistanceProvider>(to_kind(kind));
  return p;
}

void rl_provider_free(rl_provider* p) { delete p; }

rl_status rl_provider_prewarm(rl_provider* p, int64_t max_index) {
  if (p == nullptr || max_index < 0) return fail(RL_ERR_ARGUMENT, "bad prewarm");
  try {
    p->impl->ensure_range(max_index);
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_r0(rl_provider* p, int64_t m, int64_t n, double* out) {
  if (p == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  try {
    *out = p->impl->r0_index(m, n);
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_r0_exact(rl_provider* p, int64_t m, int64_t n, char* p_buf,
                      size_t p_len, char* q_buf, size_t q_len, char* s_buf,
                      size_t s_len, double* decimal) {
  if (p == nullptr) return fail(RL_ERR_ARGUMENT, "null provider");
  try {
    const reslat::ExactResistance r = p->impl->r0_exact_index(m, n);
    copy_str(r.p.get_str(), p_buf, p_len);
    copy_str(r.q.get_str(), q_buf, q_len);
    copy_str(r.s.get_str(), s_buf, s_len);
    if (decimal != nullptr) *decimal = r.to_double();
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_asymptotic_r0(int64_t m, int64_t n, double* out) {
  if (out == nullptr) return fail(RL_ERR_ARGUMENT, "null out");
  try {
    *out = reslat::asymptotic_r0(m, n);
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_quadrature_r0(rl_lattice_kind kind, int64_t m, int64_t n,
                           double tol, double* out) {
  if (out == nullptr) return fail(RL_ERR_ARGUMENT, "null out");
  try {
    *out = reslat::quadrature_r0(to_kind(kind), m, n, tol);
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_embed(rl_lattice_kind kind, int64_t m, int64_t n, double* x,
                   double* y) {
  if (x == nullptr || y == nullptr) return fail(RL_ERR_ARGUMENT, "null out");
  const reslat::Vec2 v = reslat::embed(to_kind(kind), {m, n});
  *x = v.x;
  *y = v.y;
  return RL_OK;
}

rl_editset* rl_editset_new(rl_lattice_kind kind) {
  auto* e = new rl_editset;
  e->impl = reslat::EditSet(to_kind(kind));
  return e;
}

void rl_editset_free(rl_editset* e) { delete e; }

rl_status rl_editset_add(rl_editset* e, int64_t sm, int64_t sn, int64_t em,
                         int64_t en, double beta_new) {
  if (e == nullptr) return fail(RL_ERR_ARGUMENT, "null edit set");
  try {
    e->impl.add({sm, sn}, {em, en}, beta_new);
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

size_t rl_editset_size(const rl_editset* e) {
  return e == nullptr ? 0 : e->impl.size();
}

rl_solver* rl_solver_new(rl_provider* p, const rl_editset* e, int auto_augment,
                         rl_status* status) {
  if (status != nullptr) *status = RL_OK;
  if (p == nullptr || e == nullptr) {
    if (status != nullptr) *status = fail(RL_ERR_ARGUMENT, "null arg");
    return nullptr;
  }
  try {
    auto* s = new rl_solver;
    s->impl = std::make_unique<reslat::Solver>(p->impl, e->impl,
                                               auto_augment != 0);
    return s;
  } catch (...) {
    if (status != nullptr) *status = from_exception();
    return nullptr;
  }
}

void rl_solver_free(rl_solver* s) { delete s; }

size_t rl_solver_edit_count(const rl_solver* s) {
  return s == nullptr ? 0 : s->impl->edits().size();
}

size_t rl_solver_effective_edit_count(const rl_solver* s) {
  return s == nullptr ? 0 : s->impl->effective_edits().size();
}

size_t rl_solver_restored_count(const rl_solver* s) {
  return s == nullptr ? 0 : s->impl->restored_bonds().size();
}

rl_status rl_solver_restored_bond(const rl_solver* s, size_t idx, int64_t* sm,
                                  int64_t* sn, int64_t* em, int64_t* en) {
  if (s == nullptr || idx >= s->impl->restored_bonds().size())
    return fail(RL_ERR_ARGUMENT, "restored bond index out of range");
  const reslat::Bond& b = s->impl->restored_bonds()[idx];
  if (sm) *sm = b.start.m;
  if (sn) *sn = b.start.n;
  if (em) *em = b.end.m;
  if (en) *en = b.end.n;
  return RL_OK;
}

char* rl_solver_report_json(const rl_solver* s) {
  if (s == nullptr) return nullptr;
  const std::string json = s->impl->report().to_json();
  char* out = static_cast<char*>(std::malloc(json.size() + 1));
  if (out != nullptr) std::memcpy(out, json.c_str(), json.size() + 1);
  return out;
}

size_t rl_solver_component_count(const rl_solver* s) {
  return s == nullptr ? 0 : s->impl->report().components.size();
}

rl_status rl_solver_classify(const rl_solver* s, int64_t im, int64_t in,
                             int64_t jm, int64_t jn, rl_query_class* out) {
  if (s == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  switch (reslat::classify_query(s->impl->report(), {im, in}, {jm, jn})) {
    case reslat::QueryClass::SameIsland: *out = RL_QUERY_SAME_ISLAND; break;
    case reslat::QueryClass::Disconnected: *out = RL_QUERY_DISCONNECTED; break;
    case reslat::QueryClass::InfiniteBoth: *out = RL_QUERY_INFINITE_BOTH; break;
  }
  return RL_OK;
}

rl_status rl_solver_resistance(const rl_solver* s, int64_t im, int64_t in,
                               int64_t jm, int64_t jn, double* out) {
  if (s == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  try {
    *out = s->impl->resistance({im, in}, {jm, jn}).resistance;
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_solver_perfect_resistance(const rl_solver* s, int64_t im,
                                       int64_t in, int64_t jm, int64_t jn,
                                       double* out) {
  if (s == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  try {
    *out = s->impl->perfect_resistance({im, in}, {jm, jn});
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_status rl_solver_green(const rl_solver* s, int64_t im, int64_t in,
                          int64_t jm, int64_t jn, double* out) {
  if (s == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  try {
    *out = s->impl->green_element({im, in}, {jm, jn});
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_current_map* rl_current_map_new(rl_solver* s, int64_t im, int64_t in,
                                   int64_t jm, int64_t jn, int64_t m0,
                                   int64_t n0, int64_t m1, int64_t n1,
                                   double i0, rl_status* status) {
  if (status != nullptr) *status = RL_OK;
  if (s == nullptr) {
    if (status != nullptr) *status = fail(RL_ERR_ARGUMENT, "null solver");
    return nullptr;
  }
  try {
    auto* m = new rl_current_map;
    m->impl = s->impl->currents({im, in}, {jm, jn},
                                reslat::IndexBox{m0, n0, m1, n1}, i0);
    return m;
  } catch (...) {
    if (status != nullptr) *status = from_exception();
    return nullptr;
  }
}

void rl_current_map_free(rl_current_map* m) { delete m; }

size_t rl_current_map_size(const rl_current_map* m) {
  return m == nullptr ? 0 : m->impl.entries.size();
}

rl_status rl_current_map_entry(const rl_current_map* m, size_t idx,
                               int64_t* sm, int64_t* sn, int64_t* em,
                               int64_t* en, double* current, double* gamma,
                               int* restored) {
  if (m == nullptr || idx >= m->impl.entries.size())
    return fail(RL_ERR_ARGUMENT, "current map index out of range");
  const reslat::CurrentEntry& e = m->impl.entries[idx];
  if (sm) *sm = e.bond.start.m;
  if (sn) *sn = e.bond.start.n;
  if (em) *em = e.bond.end.m;
  if (en) *en = e.bond.end.n;
  if (current) *current = e.current;
  if (gamma) *gamma = e.gamma;
  if (restored) *restored = e.restored ? 1 : 0;
  return RL_OK;
}

double rl_current_map_residual(const rl_current_map* m) {
  return m == nullptr ? 0.0 : m->impl.conservation_residual;
}

rl_finite* rl_finite_new(void) { return new rl_finite; }

void rl_finite_free(rl_finite* f) { delete f; }

int64_t rl_finite_add_node(rl_finite* f, int64_t m, int64_t n) {
  if (f == nullptr) return -1;
  f->net.reset();
  f->nodes.push_back({m, n});
  return static_cast<int64_t>(f->nodes.size()) - 1;
}

rl_status rl_finite_add_edge(rl_finite* f, int64_t a, int64_t b,
                             double conductance) {
  if (f == nullptr) return fail(RL_ERR_ARGUMENT, "null network");
  if (a < 0 || b < 0 || a >= static_cast<int64_t>(f->nodes.size()) ||
      b >= static_cast<int64_t>(f->nodes.size()) || a == b)
    return fail(RL_ERR_ARGUMENT, "invalid edge endpoints");
  if (!(conductance >= 0.0))
    return fail(RL_ERR_ARGUMENT, "conductance must be >= 0");
  f->net.reset();
  f->edges.push_back({a, b});
  f->conductances.push_back(conductance);
  return RL_OK;
}

size_t rl_finite_node_count(const rl_finite* f) {
  return f == nullptr ? 0 : f->nodes.size();
}

rl_status rl_finite_resistance(rl_finite* f, int64_t i, int64_t j,
                               double* out) {
  if (f == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  try {
    *out = f->network().resistance(static_cast<int>(i), static_cast<int>(j));
    return RL_OK;
  } catch (...) {
    return from_exception();
  }
}

rl_finite* rl_finite_truncate(rl_provider* p, const rl_editset* e,
                              int64_t half_width, rl_status* status) {
  if (status != nullptr) *status = RL_OK;
  if (p == nullptr || e == nullptr) {
    if (status != nullptr) *status = fail(RL_ERR_ARGUMENT, "null arg");
    return nullptr;
  }
  try {
    auto net = reslat::truncate_lattice(p->impl->kind(), e->impl, half_width);
    auto* f = new rl_finite;
    f->nodes = net.nodes();
    f->net = std::make_unique<reslat::FiniteNetwork>(std::move(net));
    return f;
  } catch (...) {
    if (status != nullptr) *status = from_exception();
    return nullptr;
  }
}

rl_status rl_finite_site_index(const rl_finite* f, int64_t m, int64_t n,
                               int64_t* index) {
  if (f == nullptr || index == nullptr) return fail(RL_ERR_ARGUMENT, "null arg");
  for (size_t k = 0; k < f->nodes.size(); ++k) {
    if (f->nodes[k].m == m && f->nodes[k].n == n) {
      *index = static_cast<int64_t>(k);
      return RL_OK;
    }
  }
  return fail(RL_ERR_ARGUMENT, "site not present in the network");
}

}  // extern "C"
