#ifndef UMBRATRIG_H
#define UMBRATRIG_H

/* C interface to the umbratrig library. Every call returns a ut_status; on
 * failure ut_last_error() describes the cause for the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(UMBRATRIG_BUILDING)
#define UT_API __declspec(dllexport)
#else
#define UT_API __declspec(dllimport)
#endif
#else
#define UT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ut_status {
    UT_OK = 0,
    UT_ERR_DOMAIN = 1,
    UT_ERR_POLE = 2,
    UT_ERR_OVERFLOW = 3,
    UT_ERR_CONVERGENCE = 4,
    UT_ERR_SUPPORT_MISMATCH = 5,
    UT_ERR_QUADRATURE = 6,
    UT_ERR_DIVERGENCE = 7,
    UT_ERR_INVALID_ARGUMENT = 8,
    UT_ERR_INTERNAL = 9
} ut_status;

UT_API const char* ut_last_error(void);
UT_API const char* ut_status_name(ut_status status);

typedef struct ut_eval_config {
    double rel_tol;
    int max_terms;
    int stop_streak;
} ut_eval_config;

UT_API ut_eval_config ut_eval_config_default(void);

UT_API ut_status ut_gamma(double x, double* out);
UT_API ut_status ut_beta(double x, double y, double* out);

/* ---- series families ------------------------------------------------- */

typedef struct ut_family ut_family;

/* Names: lexp, lexp_alpha, humbert, lcos, lsin, lcosh, lsinh, lcos_alpha,
 * lsin_alpha, lcos_ab, lsin_ab, phf, phf_ch, phf_sh, g_alpha. Parameters a
 * family does not use are ignored. */
UT_API ut_status ut_family_create(const char* name, double alpha, double beta, int k, int m, ut_family** out);
UT_API void ut_family_destroy(ut_family* family);
/* Writes a NUL-terminated description; truncates to cap bytes. */
UT_API ut_status ut_family_describe(const ut_family* family, char* buf, size_t cap);

UT_API ut_status ut_coeff(const ut_family* family, int n, double* out);
/* cfg may be NULL for the defaults. terms may be NULL. */
UT_API ut_status ut_eval(const ut_family* family, double re, double im, const ut_eval_config* cfg, double* out_re,
                         double* out_im, int* terms);
UT_API ut_status ut_eval_derivative(const ut_family* family, double re, double im, const ut_eval_config* cfg,
                                    double* out_re, double* out_im);

/* Operators: d, d3, ld, ld_alpha, ld_ab, theta. out must hold n entries;
 * *out_n receives the result length (n - shift, or 0). */
UT_API ut_status ut_apply_derivative(const char* op, double alpha, double beta, const double* coeffs, size_t n,
                                     double* out, size_t* out_n);

/* ---- umbral algebra --------------------------------------------------- */

typedef struct ut_sum_family ut_sum_family;
typedef struct ut_sequence ut_sequence;

/* Names: ordinary, laguerre, alpha, ab, phf03, airy. */
UT_API ut_status ut_sum_family_create(const char* name, double alpha, double beta, ut_sum_family** out);
UT_API void ut_sum_family_destroy(ut_sum_family* family);

/* Powers of x up to `order` in the indexing the family uses. */
UT_API ut_status ut_sequence_embed(const ut_sum_family* family, double re, double im, int order, ut_sequence** out);
UT_API ut_status ut_sequence_sum(const ut_sequence* a, const ut_sequence* b, const ut_sum_family* family,
                                 ut_sequence** out);
UT_API ut_status ut_sequence_scale(int k, double re, double im, const ut_sum_family* family, int order,
                                   ut_sequence** out);
UT_API void ut_sequence_destroy(ut_sequence* seq);
UT_API size_t ut_sequence_size(const ut_sequence* seq);
UT_API ut_status ut_sequence_get(const ut_sequence* seq, size_t n, double* re, double* im);

UT_API ut_status ut_eval_on_sequence(const ut_family* family, const ut_sequence* seq, const ut_eval_config* cfg,
                                     double* out_re, double* out_im);

UT_API ut_status ut_napier_term(double x, int n, double* out);
UT_API ut_status ut_j0_term(double x, int n, double* out);
UT_API ut_status ut_phf_roots_average(double x_re, double x_im, double y_re, double y_im, int n, double* out_re,
                                      double* out_im);

/* ---- generalized trigonometry ----------------------------------------- */

/* Kinds: euler, addition_cos, addition_sin, addition_cos_alpha,
 * addition_sin_alpha, addition_cos_ab, addition_sin_ab, addition_ch_phf,
 * addition_sh_phf, semigroup_l, semigroup_alpha, semigroup_phf, duplication,
 * de_moivre (param n), euler_decomp_phf (param m), pythagoras_defect. */
UT_API ut_status ut_identity_residual(const char* kind, int param, double x, double y, double alpha, double beta,
                                      const ut_eval_config* cfg, double* out);

typedef struct ut_report ut_report;

/* Sweeps every identity over points x points; params are the alpha/beta
 * values (NULL with n_params 0 uses 0.5, 1, 2). */
UT_API ut_status ut_verify(const double* points, size_t n_points, const double* params, size_t n_params,
                           double tol, const ut_eval_config* cfg, ut_report** out);
UT_API void ut_report_destroy(ut_report* report);
UT_API size_t ut_report_size(const ut_report* report);
UT_API ut_status ut_report_entry(const ut_report* report, size_t i, char* name, size_t name_cap,
                                 double* max_residual, int* evaluations, int* passed);

/* xs, lcs, lss each hold `steps` values. */
UT_API ut_status ut_lissajous(double x_max, int steps, double* xs, double* lcs, double* lss);
UT_API ut_status ut_sector_area(double x, int panels, double* area, double* double_area);
/* Same quadrature with cos/sin substituted; area is x/2 up to quadrature error. */
UT_API ut_status ut_sector_area_circular(double x, int panels, double* area, double* double_area);

/* ---- transforms and diffusion ----------------------------------------- */

typedef enum ut_quad_kind { UT_QUAD_GAUSS_LAGUERRE = 0, UT_QUAD_GAUSS_JACOBI = 1, UT_QUAD_SIMPSON = 2 } ut_quad_kind;

typedef struct ut_quadrature {
    ut_quad_kind kind;
    int nodes;
    double exp_at_1;
    double exp_at_0;
} ut_quadrature;

typedef double (*ut_density_fn)(double t, void* user);
typedef struct ut_density ut_density;

/* fn may be NULL for a purely atomic density. support_max may be INFINITY. */
UT_API ut_status ut_density_create(ut_density_fn fn, void* user, double decay_rate, double support_max,
                                   ut_density** out);
UT_API ut_status ut_density_add_atom(ut_density* density, double location, double weight);
UT_API void ut_density_destroy(ut_density* density);

/* quad may be NULL for each function's default rule. */
UT_API ut_status ut_borel_transform(const ut_family* family, double x, const ut_quadrature* quad, double* out);
UT_API ut_status ut_g_alpha_integral(double eta, double alpha, const ut_quadrature* quad, double* out);
UT_API ut_status ut_laguerre_heat_closed(double x, double tau, double* out);
UT_API ut_status ut_heat_spectral(const ut_density* density, const ut_family* eigenfamily, double x, double tau,
                                  const ut_quadrature* quad, double* out);
UT_API ut_status ut_ll_heat_umbral(const double* coeffs, size_t n, double x, double tau, int n_max,
                                   const ut_eval_config* cfg, double* out);
UT_API ut_status ut_airy_heat_spectral(const ut_density* density, double alpha, double x, double t,
                                       const ut_quadrature* quad, double* out);
/* out holds blocks + 1 values. */
UT_API ut_status ut_airy_heat_coefficients(const ut_density* density, double alpha, double t, int blocks,
                                           const ut_quadrature* quad, double* out);
UT_API ut_status ut_heat_power_series(const double* coeffs, size_t n, const char* op, double alpha, double beta,
                                      double x, double tau, double* out);

#ifdef __cplusplus
}
#endif

#endif
