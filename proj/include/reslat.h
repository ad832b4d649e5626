/* reslat - two-point resistance of perturbed infinite resistor lattices.
 *
 * C API over opaque handles.  All functions returning rl_status set a
 * thread-local message retrievable with rl_last_error() on failure.
 * Resistances are in units of the lattice resistor R, conductances are
 * dimensionless (perfect bond = 1, removed bond = 0).
 */
#ifndef RESLAT_H
#define RESLAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RESLAT_API __declspec(dllexport)
#else
#define RESLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_ARGUMENT = 1,        /* bad parameter / domain violation */
  RL_ERR_NOT_ADJACENT = 2,    /* bond endpoints are not nearest neighbors */
  RL_ERR_DUPLICATE_BOND = 3,  /* bond already present in the edit set */
  RL_ERR_SINGULAR = 4,        /* matrix B singular: disconnected network */
  RL_ERR_DISCONNECTED = 5,    /* finite network is not connected */
  RL_ERR_WINDOW = 6,          /* window too small / missing */
  RL_ERR_CONVERGENCE = 7,     /* iteration or quadrature did not converge */
  RL_ERR_RANGE = 8,           /* parameter outside documented range */
  RL_ERR_CONSERVATION = 9,    /* current map failed Kirchhoff check */
  RL_ERR_AUGMENTATION = 10,   /* no valid bridge/dangling augmentation */
  RL_ERR_INTERNAL = 11
} rl_status;

typedef enum rl_lattice_kind {
  RL_LATTICE_SQUARE = 0,
  RL_LATTICE_TRIANGULAR = 1
} rl_lattice_kind;

/* Classification of a site pair against the defect report (section-3 cases). */
typedef enum rl_query_class {
  RL_QUERY_INFINITE_BOTH = 0, /* both sites in the infinite part */
  RL_QUERY_SAME_ISLAND = 1,   /* same finite component: finite-network solve */
  RL_QUERY_DISCONNECTED = 2   /* different components: infinite resistance */
} rl_query_class;

typedef struct rl_provider rl_provider;
typedef struct rl_editset rl_editset;
typedef struct rl_solver rl_solver;
typedef struct rl_current_map rl_current_map;
typedef struct rl_finite rl_finite;

RESLAT_API const char* rl_version(void);
/* Message for the most recent failure on this thread. */
RESLAT_API const char* rl_last_error(void);
/* Free strings returned by rl_*_json functions. */
RESLAT_API void rl_string_free(char* s);

/* ---- perfect lattice ---- */

RESLAT_API rl_provider* rl_provider_new(rl_lattice_kind kind);
RESLAT_API void rl_provider_free(rl_provider* p);
/* Pre-compute every displacement with |m|,|n| <= max_index. */
RESLAT_API rl_status rl_provider_prewarm(rl_provider* p, int64_t max_index);
/* Exact two-point resistance R0 of the perfect lattice for displacement
 * (m, n); the rational components of p + q/pi + s*sqrt(3)/pi are written as
 * "num/den" strings when buffers are given (pass NULL to skip). */
RESLAT_API rl_status rl_r0(rl_provider* p, int64_t m, int64_t n, double* out);
RESLAT_API rl_status rl_r0_exact(rl_provider* p, int64_t m, int64_t n,
                                 char* p_buf, size_t p_len, char* q_buf,
                                 size_t q_len, char* s_buf, size_t s_len,
                                 double* decimal);
/* Large-separation approximation for the square lattice. */
RESLAT_API rl_status rl_asymptotic_r0(int64_t m, int64_t n, double* out);
/* Brillouin-zone quadrature reference value (slow; test oracle). */
RESLAT_API rl_status rl_quadrature_r0(rl_lattice_kind kind, int64_t m,
                                      int64_t n, double tol, double* out);
/* Cartesian embedding of a lattice site. */
RESLAT_API rl_status rl_embed(rl_lattice_kind kind, int64_t m, int64_t n,
                              double* x, double* y);

/* ---- edit sets ---- */

RESLAT_API rl_editset* rl_editset_new(rl_lattice_kind kind);
RESLAT_API void rl_editset_free(rl_editset* e);
/* beta_new = 0 removes the bond, other values replace its conductance. */
RESLAT_API rl_status rl_editset_add(rl_editset* e, int64_t sm, int64_t sn,
                                    int64_t em, int64_t en, double beta_new);
RESLAT_API size_t rl_editset_size(const rl_editset* e);

/* ---- perturbed-lattice solver ---- */

/* Builds the defect report and (when auto_augment is nonzero) the bridge /
 * dangling-bond augmentation.  The Woodbury factorization itself is built
 * on first use; with auto_augment = 0 and a disconnecting edit set the
 * query functions return RL_ERR_SINGULAR. */
RESLAT_API rl_solver* rl_solver_new(rl_provider* p, const rl_editset* e,
                                    int auto_augment, rl_status* status);
RESLAT_API void rl_solver_free(rl_solver* s);

RESLAT_API size_t rl_solver_edit_count(const rl_solver* s);       /* original */
RESLAT_API size_t rl_solver_effective_edit_count(const rl_solver* s);
RESLAT_API size_t rl_solver_restored_count(const rl_solver* s);
RESLAT_API rl_status rl_solver_restored_bond(const rl_solver* s, size_t idx,
                                             int64_t* sm, int64_t* sn,
                                             int64_t* em, int64_t* en);
/* Defect report as a JSON document (components, kinds, sites). */
RESLAT_API char* rl_solver_report_json(const rl_solver* s);
RESLAT_API size_t rl_solver_component_count(const rl_solver* s);

RESLAT_API rl_status rl_solver_classify(const rl_solver* s, int64_t im,
                                        int64_t in, int64_t jm, int64_t jn,
                                        rl_query_class* out);
/* Two-point resistance with section-3 routing: same-island pairs solved as
 * a finite network, disconnected pairs report +infinity. */
RESLAT_API rl_status rl_solver_resistance(const rl_solver* s, int64_t im,
                                          int64_t in, int64_t jm, int64_t jn,
                                          double* out);
RESLAT_API rl_status rl_solver_perfect_resistance(const rl_solver* s,
                                                  int64_t im, int64_t in,
                                                  int64_t jm, int64_t jn,
                                                  double* out);
/* Perturbed Green element G(i,j) in the G0(i,i) = 0 gauge, units 1/R. */
RESLAT_API rl_status rl_solver_green(const rl_solver* s, int64_t im,
                                     int64_t in, int64_t jm, int64_t jn,
                                     double* out);

/* ---- bond-current maps ---- */

RESLAT_API rl_current_map* rl_current_map_new(rl_solver* s, int64_t im,
                                              int64_t in, int64_t jm,
                                              int64_t jn, int64_t m0,
                                              int64_t n0, int64_t m1,
                                              int64_t n1, double i0,
                                              rl_status* status);
RESLAT_API void rl_current_map_free(rl_current_map* m);
RESLAT_API size_t rl_current_map_size(const rl_current_map* m);
/* Signed current flows start -> end; restored is 1 for bridge / dangling
 * bonds added by augmentation. */
RESLAT_API rl_status rl_current_map_entry(const rl_current_map* m, size_t idx,
                                          int64_t* sm, int64_t* sn,
                                          int64_t* em, int64_t* en,
                                          double* current, double* gamma,
                                          int* restored);
/* Worst interior Kirchhoff residual, in units of I0. */
RESLAT_API double rl_current_map_residual(const rl_current_map* m);

/* ---- finite networks ---- */

RESLAT_API rl_finite* rl_finite_new(void);
RESLAT_API void rl_finite_free(rl_finite* f);
/* Returns the index of the added node. */
RESLAT_API int64_t rl_finite_add_node(rl_finite* f, int64_t m, int64_t n);
RESLAT_API rl_status rl_finite_add_edge(rl_finite* f, int64_t a, int64_t b,
                                        double conductance);
RESLAT_API size_t rl_finite_node_count(const rl_finite* f);
RESLAT_API rl_status rl_finite_resistance(rl_finite* f, int64_t i, int64_t j,
                                          double* out);
/* Free-boundary window |m|,|n| <= half_width of the edited lattice. */
RESLAT_API rl_finite* rl_finite_truncate(rl_provider* p, const rl_editset* e,
                                         int64_t half_width,
                                         rl_status* status);
RESLAT_API rl_status rl_finite_site_index(const rl_finite* f, int64_t m,
                                          int64_t n, int64_t* index);

#ifdef __cplusplus
}
#endif

#endif /* RESLAT_H */
