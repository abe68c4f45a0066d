/*
 * mcshane — length spectra and boundary-partition identities of
 * non-orientable hyperbolic surfaces.
 *
 * C interface of the shared library.  All functions return a status code
 * (MSH_OK on success); results travel through out-parameters.  Objects with
 * state are reached through opaque handles that must be released with the
 * matching destroy call.  The last error message of the calling thread is
 * available from msh_last_error().
 */

#ifndef MCSHANE_H
#define MCSHANE_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(MCSHANE_BUILDING_SHARED)
#    define MSH_API __declspec(dllexport)
#  else
#    define MSH_API __declspec(dllimport)
#  endif
#else
#  define MSH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status ----------------------------------------------------------- */

typedef enum msh_status {
    MSH_OK = 0,
    MSH_ERR_NULL_POINTER = 1,
    MSH_ERR_INVALID_ARGUMENT = 2,  /* bad flag, count, or handle state */
    MSH_ERR_DOMAIN = 3,            /* argument outside mathematical domain */
    MSH_ERR_INVALID_SEED = 4,      /* seed defines no hyperbolic surface */
    MSH_ERR_LOXODROMIC = 5,        /* Re(l_gamma) = 0: identity not certified */
    MSH_ERR_DEGENERATE = 6,        /* degenerate configuration; resample */
    MSH_ERR_NO_CONVERGENCE = 7,    /* tolerance not certified within limits */
    MSH_ERR_INTERNAL = 8
} msh_status;

MSH_API const char* msh_status_name(int status);

/* Message describing the most recent failure on this thread. */
MSH_API const char* msh_last_error(void);

MSH_API const char* msh_version(void);

/* ---- scalar kernels ---------------------------------------------------- */

/* Trace <-> length dictionary.  det_sign +1: tr = 2 cosh(l/2) (two-sided),
 * det_sign -1: tr = 2 sinh(l/2) (one-sided). */
MSH_API int msh_length_from_trace(double trace, int det_sign, double* length_out);
MSH_API int msh_trace_from_length(double length, int one_sided, double* trace_out);

/* Summand functions of the boundary-partition identities. */
MSH_API int msh_R(double x, double y, double z, double* out);
MSH_API int msh_D(double x, double y, double z, double* out);
MSH_API int msh_E(double x, double y, double z, double* out);
MSH_API int msh_F(double x, double y, double z, double* out);
MSH_API int msh_bordered_rhs(double L, double l_gamma, double* out);

/* Fourth length on the Moebius strip minus a disk:
 * cosh(x/2) + cosh(y/2) = 2 sinh(z/2) sinh(z'/2). */
MSH_API int msh_fourth_length_mobius(double x, double y, double z, double* out);

/* ---- series ------------------------------------------------------------ */

typedef struct msh_series_report {
    double partial_sum_re, partial_sum_im;
    double target_re, target_im;
    double residual;
    double tail_bound;
    int64_t terms_used;
    int converged; /* 1 when tail_bound <= tol */
    /* context */
    double y0_re, y0_im, y1_re, y1_im;
    double z_re, z_im;
    double l_gamma_re, l_gamma_im;
    double c;
    double boundary_length; /* bordered case */
    int depth;              /* torus case */
} msh_series_report;

MSH_API int msh_sum_punctured_klein(double y0, double y1, double tol, int64_t max_terms,
                                    msh_series_report* out);
MSH_API int msh_sum_bordered_klein(double L, double y0, double y1, double tol,
                                   int64_t max_terms, msh_series_report* out);
MSH_API int msh_sum_punctured_torus(int depth, double tol, msh_series_report* out);
MSH_API int msh_sum_complex(double y0_re, double y0_im, double y1_re, double y1_im,
                            double tol, int64_t max_terms, msh_series_report* out);

/* ---- spectra ------------------------------------------------------------ */

typedef struct msh_spectrum msh_spectrum;

/* One-sided trace sequence with recursion constant c (punctured case: c = 1). */
MSH_API int msh_spectrum_create(double y0, double y1, double c, msh_spectrum** out);
/* Bordered sequence: c = cosh^2(L/4). */
MSH_API int msh_spectrum_create_bordered(double L, double y0, double y1, msh_spectrum** out);
/* Integral-trace surface, seeded (1, 2) with Z = 3. */
MSH_API int msh_spectrum_create_fibonacci(msh_spectrum** out);
MSH_API void msh_spectrum_destroy(msh_spectrum* s);

MSH_API int msh_spectrum_extend(msh_spectrum* s, int64_t lo, int64_t hi);
MSH_API int msh_spectrum_range(const msh_spectrum* s, int64_t* lo, int64_t* hi);
MSH_API int msh_spectrum_term(const msh_spectrum* s, int64_t index, double* y_out);
MSH_API int msh_spectrum_z(const msh_spectrum* s, double* z_out);
MSH_API int msh_spectrum_constant(const msh_spectrum* s, double* c_out);
/* 2 arccosh(Z/2), length of the unique two-sided geodesic. */
MSH_API int msh_spectrum_l_gamma(const msh_spectrum* s, double* out);
/* Index and value of the minimal element (extends lazily as needed). */
MSH_API int msh_spectrum_min(msh_spectrum* s, int64_t* index_out, double* y_out);

/* Vieta-flip tree of trace triples x^2+y^2+z^2-xyz = 2-delta.  Writes up to
 * capacity triples as (x, y, z) into buf and the total count into count_out;
 * fails with MSH_ERR_INVALID_ARGUMENT if capacity is too small. */
MSH_API int msh_markoff_tree(int depth, double delta, double* buf, int64_t capacity,
                             int64_t* count_out);

/* Generators of the integral-trace surface as row-major 2x2 matrices. */
MSH_API int msh_fibonacci_generators(double a_out[4], double b_out[4]);

/* ---- geodesic ray shooting ---------------------------------------------- */

typedef struct msh_surface msh_surface;

MSH_API int msh_surface_create_pants(double l1, double l2, double l3, msh_surface** out);
MSH_API int msh_surface_create_moebius(double x, double y, double z, msh_surface** out);
MSH_API void msh_surface_destroy(msh_surface* s);

/* Boundary lengths of the realized surface; moebius also reports z and z'. */
MSH_API int msh_surface_info(const msh_surface* s, int* is_moebius, double* lengths3,
                             double* z_out, double* z_prime_out);

enum {
    MSH_SHOT_SELF_OR_START = 0,
    MSH_SHOT_HIT_BOUNDARY = 1,
    MSH_SHOT_UNRESOLVED = 2
};
enum { MSH_FIRST_NONE = 0, MSH_FIRST_MU = 1, MSH_FIRST_MU_PRIME = 2 };

typedef struct msh_shot {
    int classification; /* MSH_SHOT_* */
    int boundary_index; /* 2 or 3 when a boundary was hit */
    int first_one_sided; /* MSH_FIRST_* (moebius only) */
    int crossed_mu, crossed_mu_prime;
    int64_t arcs_traced;
    double path_length;
    double launch_s;
} msh_shot;

MSH_API int msh_surface_shoot(const msh_surface* s, double launch_s, int max_arcs,
                              msh_shot* out);

typedef struct msh_partition {
    int64_t samples;
    int64_t n_type_a, n_hit_b2, n_hit_b3, n_unresolved;
    int64_t n_first_mu, n_first_mu_prime;
    int64_t degenerate_retries;
    int64_t fact_i_violations, fact_ii_violations;
} msh_partition;

/* Stratified launch sampling; deterministic for fixed seed.  When shots_buf
 * is non-null it receives exactly n_samples outcomes. */
MSH_API int msh_surface_estimate_partition(const msh_surface* s, int64_t n_samples,
                                           int max_arcs, uint64_t seed,
                                           msh_partition* out, msh_shot* shots_buf);

/* ---- moduli space -------------------------------------------------------- */

typedef struct msh_integral_result {
    double value;
    double error_estimate; /* quadrature: certified estimate; MC: one sigma */
    int has_target;
    double target;
    double residual;
    int64_t samples;
} msh_integral_result;

enum { MSH_METHOD_QUADRATURE = 0, MSH_METHOD_MONTE_CARLO = 1 };

MSH_API int msh_integrate_punctured_klein(int n, int method, double tol,
                                          int64_t mc_samples, uint64_t seed,
                                          msh_integral_result* out);
/* Direct one-variable form of the n = 1 integral. */
MSH_API int msh_integrate_punctured_klein_direct(double tol, msh_integral_result* out);

/* One-sided coordinates (Y1, Y2) = 2 sinh(l_mu/2) from Fenchel-Nielsen data. */
MSH_API int msh_chart_one_sided(double L, double l_gamma, double theta, double* y1_out,
                                double* y2_out);
/* Volume-form invariance deviation at a chart point (finite differences). */
MSH_API int msh_jacobian_check_klein(double L, double l_gamma, double theta, double h,
                                     double* deviation_out);
/* Residual of coth(z/2) dz + coth(z'/2) dz' = 0 on the fourth-length constraint. */
MSH_API int msh_jacobian_check_moebius(double x, double y, double z, double h,
                                       double* residual_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MCSHANE_H */
