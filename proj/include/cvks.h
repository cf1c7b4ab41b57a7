/* cvks: continuous-variable contextuality simulation, C interface.
 *
 * All functions return CVKS_OK on success. On failure a status code is
 * returned and cvks_last_error() carries a human-readable detail message
 * (thread-local). Opaque handles own their resources and must be released
 * with the matching destroy call.
 */
#ifndef CVKS_H
#define CVKS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CVKS_API __declspec(dllexport)
#else
#define CVKS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvks_status {
  CVKS_OK = 0,
  CVKS_EINVAL = 1,       /* invalid argument / precondition violation */
  CVKS_EDOMAIN = 2,      /* input outside the mathematical domain */
  CVKS_ECONVERGENCE = 3, /* quadrature or truncation failed to converge */
  CVKS_EINTERNAL = 4
} cvks_status;

CVKS_API const char* cvks_version(void);
CVKS_API const char* cvks_strerror(cvks_status status);
/* Detail message for the most recent failure on this thread. */
CVKS_API const char* cvks_last_error(void);

CVKS_API double cvks_nchv_bound(void);  /* 4 */
CVKS_API double cvks_quantum_max(void); /* 6 */

/* ---- Werner-family contextuality sum ---- */

typedef struct cvks_werner_result {
  double ks;                /* r1+r2+r3+c1+c2-c3, exact gate pipeline */
  double r[3];
  double c[3];
  double max_imag_residue;
  double oracle;            /* closed-form reference value; NaN if no case */
  int has_oracle;           /* 1 when (a,p) matches a tabulated case */
} cvks_werner_result;

CVKS_API cvks_status cvks_werner_eval(double a, double p, double alpha,
                                      cvks_werner_result* out);

/* Closed-form reference value alone (fails with CVKS_EINVAL if (a,p) is not
 * one of the five tabulated cases). */
CVKS_API cvks_status cvks_reference_oracle(double a, double p, double alpha,
                                           double* out);

/* Label-anchored closed-form recursion (cross-validation evaluator). */
CVKS_API cvks_status cvks_closed_form_eval(double a, double p, double alpha,
                                           double* out_ks);

/* ---- sign-binned homodyne CHSH ---- */

CVKS_API cvks_status cvks_chsh_value(double a, double p, double alpha,
                                     const double angles[4], double* out);

/* Multi-start simplex maximisation over [0, pi]^4. Deterministic per seed.
 * angles_out (len 4) receives theta1, theta1', theta2, theta2'. */
CVKS_API cvks_status cvks_chsh_maximize(double a, double p, double alpha,
                                        int restarts, uint64_t seed,
                                        double* best, double angles_out[4]);

/* ---- pseudo-spin engine ---- */

typedef struct cvks_pseudospin cvks_pseudospin;

/* dim = 0 derives the truncation from the quadrature nodes. dim must be even
 * when given. quad_nodes >= 16. */
CVKS_API cvks_status cvks_pseudospin_create(int dim, int quad_nodes,
                                            cvks_pseudospin** out);
CVKS_API cvks_status cvks_pseudospin_ks(cvks_pseudospin* handle, double r,
                                        double* ks, double* norm_defect);
CVKS_API void cvks_pseudospin_destroy(cvks_pseudospin* handle);

/* ---- full state independence check ---- */

typedef struct cvks_rrep_report {
  double max_ks_deviation;   /* max |ks - 6| over the samples */
  double norm_check_error;   /* |normalization integral - 1| for one sample */
  int gamma_identity_ok;     /* 1 if every Gamma product is +-identity */
} cvks_rrep_report;

/* Evaluates ks on `samples` seeded random two-mode density matrices at the
 * given per-mode dimension. ks_out may be NULL or an array of length samples. */
CVKS_API cvks_status cvks_rrep_run(int dim_per_mode, int samples, uint64_t seed,
                                   double* ks_out, cvks_rrep_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CVKS_H */
