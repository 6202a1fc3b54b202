/*
 * pld - Poisson-Lie deformations of bi-Hamiltonian systems.
 *
 * C interface to the simulation core: opaque handles, integer status codes,
 * plain double buffers. The integrable-limit Lorenz system (R^4) and the
 * Euler top (R^3) are available as deformation families over a non-abelian
 * group parameter eta, together with their N-fold couplings, numerical
 * integration with invariant monitoring, the structural verification suite
 * and figure output.
 */
#ifndef PLD_H
#define PLD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pld_status {
  PLD_OK = 0,
  PLD_ERR_INVALID_ARG = 1,  /* null pointer, bad flag value, unknown name */
  PLD_ERR_DIMENSION = 2,    /* buffer length does not match the model */
  PLD_ERR_NONFINITE = 3,    /* integration aborted on a non-finite state */
  PLD_ERR_IO = 4,           /* file could not be written */
  PLD_ERR_INTERNAL = 5
} pld_status;

/* Human-readable name of a status code. */
const char* pld_status_name(pld_status status);

/* Message for the most recent error on this thread ("" if none). */
const char* pld_last_error(void);

/* ------------------------------------------------------------------ */
/* Models                                                              */
/* ------------------------------------------------------------------ */

typedef struct pld_model pld_model;

/* system is "lorenz" (dim 4) or "euler" (dim 3). */
pld_status pld_model_create(const char* system, double eta, pld_model** out);

/* Coupled model on N copies of the group, N >= 2. */
pld_status pld_model_couple(const pld_model* base, int copies, pld_model** out);

/* Single-sign/single-term corruption for fault-injection runs. Base models
 * only. */
pld_status pld_model_inject_fault(pld_model* model, const char* fault);

void pld_model_free(pld_model* model);

int pld_model_dim(const pld_model* model);     /* phase space dimension */
int pld_model_copies(const pld_model* model);  /* 1 for a base model */
double pld_model_eta(const pld_model* model);

/* JSON model card. Writes up to cap bytes (including the terminator) and
 * stores the required size in *needed; returns PLD_OK when it fit. */
pld_status pld_model_card_json(const pld_model* model, char* buf, size_t cap, size_t* needed);

/* ------------------------------------------------------------------ */
/* Pointwise evaluation                                                */
/* ------------------------------------------------------------------ */

/* which selects the Hamiltonian description: 0 = (Pi_0, H_0), 1 = (Pi_1, H_1).
 * Buffers are length dim (state, field) or dim*dim row-major (bivector). */
pld_status pld_eval_bivector(const pld_model* model, int which, const double* x, double* pi);
pld_status pld_eval_vector_field(const pld_model* model, int which, const double* x, double* dx);
pld_status pld_eval_hamiltonian(const pld_model* model, int which, const double* x, double* value);

/* Iterated group multiplication of the N factor states; for a base model the
 * identity map. out has the base dimension. */
pld_status pld_reduce_state(const pld_model* model, const double* x, double* out);

/* ------------------------------------------------------------------ */
/* Integration                                                         */
/* ------------------------------------------------------------------ */

typedef struct pld_integrator_config {
  const char* method; /* "rk4" (default) or "dopri5" */
  double dt;          /* rk4 step, > 0 */
  double rtol, atol;  /* dopri5 tolerances in (0, 1e-2] */
  double t_end;       /* > 0 */
  int sample_every;   /* keep every k-th step, >= 1 */
} pld_integrator_config;

typedef struct pld_trajectory pld_trajectory;

/* Integrates the flow of the selected Hamiltonian description from x0
 * (length dim). Conserved quantities are monitored along the way. */
pld_status pld_simulate(const pld_model* model, int which, const double* x0, int x0_len,
                        const pld_integrator_config* config, pld_trajectory** out);

void pld_trajectory_free(pld_trajectory* traj);

int pld_trajectory_samples(const pld_trajectory* traj);
int pld_trajectory_dim(const pld_trajectory* traj);
int pld_trajectory_monitor_count(const pld_trajectory* traj);
const char* pld_trajectory_monitor_name(const pld_trajectory* traj, int index);

/* Copies one sample: *t, state (dim doubles), monitors (monitor_count
 * doubles). Null destinations are skipped. */
pld_status pld_trajectory_row(const pld_trajectory* traj, int row, double* t, double* state,
                              double* monitors);

/* Max relative drift |F(t)-F(0)| / max(|F(0)|, 1e-12) of one monitor. */
pld_status pld_trajectory_drift(const pld_trajectory* traj, int monitor, double* drift);

/* Min distance back to the initial state over samples with t > settle, and
 * the time where it is attained. */
pld_status pld_trajectory_closure(const pld_trajectory* traj, double settle, double* distance,
                                  double* period);

pld_status pld_trajectory_write_csv(const pld_trajectory* traj, const char* path);

/* 2D projection onto coordinates (ci, cj), 0-based. */
pld_status pld_trajectory_write_svg(const pld_trajectory* traj, const char* path, int ci, int cj);

/* ------------------------------------------------------------------ */
/* Verification suite and figure reproduction                          */
/* ------------------------------------------------------------------ */

/* Runs the structural checks (Jacobi, compatibility, cocycle,
 * multiplicativity, Casimirs, bi-Hamiltonian, involution, reduction, ...) for
 * one system over an eta and alpha grid.
 *   etas/alphas may be NULL to use the default grids
 *   fault may be NULL (intact model)
 *   report_path may be NULL (no JSON file)
 *   *all_pass receives 1/0.
 */
pld_status pld_verify(const char* system, const double* etas, int n_etas, const double* alphas,
                      int n_alphas, uint64_t seed, const char* fault, const char* report_path,
                      int* all_pass);

/* Overlays the eta in {0, +-pi/4, +-pi/8} orbits for the two reference
 * initial conditions; panel is "A", "B" or "AB". svg_path may be NULL.
 * *all_closed receives 1 when every orbit closes within tolerance 1e-3. */
pld_status pld_figure1(const char* panel, double t_end, double dt, const char* svg_path,
                       int* all_closed);

/* Names of the documented fault injections, one per call; returns NULL past
 * the end. */
const char* pld_fault_name(const char* system, int index);

#ifdef __cplusplus
}
#endif

#endif /* PLD_H */
