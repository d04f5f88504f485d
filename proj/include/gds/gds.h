// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GDS_GDS_H_
#define GDS_GDS_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GDS_BUILDING_LIBRARY)
#    define GDS_API __declspec(dllexport)
#  else
#    define GDS_API __declspec(dllimport)
#  endif
#else
#  define GDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns a status; on failure gds_last_error() describes it.
   Output arguments are left untouched unless GDS_OK is returned. */
typedef enum gds_status {
  GDS_OK = 0,
  GDS_ERR_NULL_ARGUMENT = 1,
  GDS_ERR_INVALID_ARGUMENT = 2,
  GDS_ERR_POLE = 3,
  GDS_ERR_UNSUPPORTED_REGION = 4,
  GDS_ERR_SCHEMA = 5,
  GDS_ERR_NOT_CONVERGED = 6,
  GDS_ERR_NON_INTEGER_DEGREE = 7,
  GDS_ERR_INTERNAL = 8
} gds_status;

/* Message of the most recent failure on the calling thread ("" if none). */
GDS_API const char* gds_last_error(void);
GDS_API const char* gds_status_name(gds_status status);
GDS_API const char* gds_version(void);

/* Strings returned through char** are owned by the caller. */
GDS_API void gds_string_free(char* s);

typedef struct gds_complex {
  double re;
  double im;
} gds_complex;

typedef struct gds_value {
  gds_complex value;
  double error; /* bound on the truncation remainder */
} gds_value;

/* ---- series ---- */

typedef struct gds_series gds_series;

GDS_API gds_status gds_series_zeta(gds_series** out);
GDS_API gds_status gds_series_shifted_zeta(gds_series** out);
/* zeta of Q(sqrt D), D a fundamental discriminant. */
GDS_API gds_status gds_series_dedekind(long long discriminant, gds_series** out);
/* L(s, chi_D) for the Kronecker character of a fundamental discriminant. */
GDS_API gds_status gds_series_dirichlet_kronecker(long long discriminant, gds_series** out);
/* Real character given as chi(0), ..., chi(modulus - 1). */
GDS_API gds_status gds_series_dirichlet(int modulus, const double* values, gds_series** out);
GDS_API gds_status gds_series_from_json(const char* text, gds_series** out);
GDS_API gds_status gds_series_load(const char* path, gds_series** out);

typedef enum gds_tail_type {
  GDS_TAIL_NONE = 0,
  GDS_TAIL_INTEGRAL_TEST = 1,
  GDS_TAIL_GEOMETRIC = 2
} gds_tail_type;

typedef struct gds_tail_bound {
  gds_tail_type type;
  double C;
  double kappa;     /* integral_test */
  double ratio;     /* geometric */
  double sigma_min; /* geometric */
} gds_tail_bound;

GDS_API gds_status gds_series_from_terms(const char* name, const double* lambda, const double* a,
                                         size_t n, const gds_tail_bound* tail, gds_series** out);
/* Terms of a + sign * b with lambda <= cutoff. */
GDS_API gds_status gds_series_merge(const gds_series* a, const gds_series* b, double sign,
                                    double cutoff, gds_series** out);
GDS_API void gds_series_free(gds_series* series);

GDS_API const char* gds_series_name(const gds_series* series);
GDS_API const char* gds_series_family(const gds_series* series);
GDS_API int gds_series_has_pole(const gds_series* series);
GDS_API gds_status gds_series_to_json(const gds_series* series, char** out);

GDS_API gds_status gds_evaluate(const gds_series* series, gds_complex s, double tol,
                                gds_value* out);
GDS_API gds_status gds_derivative(const gds_series* series, gds_complex s, int order, double tol,
                                  gds_value* out);
GDS_API gds_status gds_residue(const gds_series* series, double tol, double* out);

#define GDS_MAX_AXIOMS 8
#define GDS_MAX_TRIVIAL_ZEROS 5

typedef struct gds_axiom {
  char id[32];
  int pass;
  char witness[128];
} gds_axiom;

typedef struct gds_class_b_report {
  int all_pass;
  double rho;
  size_t n_axioms;
  gds_axiom axioms[GDS_MAX_AXIOMS];
  size_t n_trivial_zeros;
  double trivial_zero_residuals[GDS_MAX_TRIVIAL_ZEROS]; /* |F(-2nd)| */
} gds_class_b_report;

GDS_API gds_status gds_check_class_b(const gds_series* series, int d, int n_zeros, double tol,
                                     gds_class_b_report* out);

/* ---- special functions ---- */

GDS_API gds_status gds_log_gamma(gds_complex s, gds_complex* out);
GDS_API gds_status gds_stirling_log_gamma(double s, int terms, double* value, double* error_bound);

typedef struct gds_gamma_bound_report {
  double sigma;
  double t_cut;
  double integral_value;
  double quadrature_error;
  double tail_bound;
  double bound_ratio;
} gds_gamma_bound_report;

GDS_API gds_status gds_gamma_bound(double sigma, double t_cut, double tol,
                                   gds_gamma_bound_report* out);

/* ---- growth invariants ---- */

typedef struct gds_profile gds_profile;

typedef struct gds_profile_sample {
  double r;
  double log_max;
  double argmax_angle;
} gds_profile_sample;

GDS_API gds_status gds_profile_compute(const gds_series* series, const double* r_grid, size_t n,
                                       int angular_resolution, double tol, gds_profile** out);
GDS_API gds_status gds_profile_from_samples(const double* r, const double* log_max, size_t n,
                                            gds_profile** out);
GDS_API void gds_profile_free(gds_profile* profile);
GDS_API size_t gds_profile_size(const gds_profile* profile);
GDS_API gds_status gds_profile_sample_at(const gds_profile* profile, size_t i,
                                         gds_profile_sample* out);
GDS_API gds_status gds_profile_to_csv(const gds_profile* profile, char** out);

typedef struct gds_invariants {
  int d;
  double alpha;
  double q;
  double fit_residual;
  double perturbed_residual;
  double residual_ratio;
  int lower_bound_heuristic_pass;
} gds_invariants;

GDS_API gds_status gds_fit_invariants(const gds_profile* profile, int d_max, gds_invariants* out);
/* Functional-equation JSON; on GDS_ERR_NON_INTEGER_DEGREE *raw_degree (if
   non-null) receives 2 sum alpha_i. */
GDS_API gds_status gds_invariants_from_fe_json(const char* text, gds_invariants* out,
                                               double* raw_degree);
/* From the family's own functional equation. */
GDS_API gds_status gds_invariants_builtin(const gds_series* series, gds_invariants* out);
/* Known (d, alpha, q); *found = 0 for families without them. */
GDS_API gds_status gds_nominal_invariants(const gds_series* series, int* found, gds_invariants* out);

/* ---- Beurling product ---- */

typedef struct gds_log_f_value {
  double value;
  double error;
  long long trunc_n;
} gds_log_f_value;

GDS_API gds_status gds_log_f(const gds_series* series, int d, double x, double tol,
                             gds_log_f_value* out);
GDS_API gds_status gds_psi(const gds_series* series, int d, gds_complex s, double tol,
                           gds_complex* out);

typedef struct gds_principal_parts {
  double c_minus2_at_0;
  double c_minus1_at_0;
  double residue_at_1;
  double expected_c_minus2;
  double expected_c_minus1;
  double expected_residue;
} gds_principal_parts;

GDS_API gds_status gds_principal_parts_of(const gds_series* series, int d, double tol,
                                          gds_principal_parts* out);

typedef struct gds_mellin_result {
  gds_complex lhs;
  gds_complex rhs;
  double abs_diff;
  double quadrature_error;
} gds_mellin_result;

GDS_API gds_status gds_mellin_check(gds_complex s, double tol, gds_mellin_result* out);

typedef struct gds_law {
  int d;
  double a;
  double b;
  double m;
  double delta_margin;
  double g0;
  double g1;
  double rho;
  double alpha; /* NaN when unknown */
  double rate;
  double power;
  double log_scale;
  double tol;
} gds_law;

GDS_API gds_status gds_asymptotic_constants(const gds_series* series, int d, double tol,
                                            gds_law* out);
GDS_API double gds_law_log_model(const gds_law* law, double x);

typedef struct gds_decay_point {
  double x;
  double log_f;
  double log_model;
  double residual_log; /* NaN when unavailable */
  int cancellation_flag;
  char method[16]; /* "direct", "contour" or "unavailable" */
} gds_decay_point;

/* out must hold n points. */
GDS_API gds_status gds_decay(const gds_series* series, const gds_law* law, const double* x,
                             size_t n, gds_decay_point* out);

typedef enum gds_shape { GDS_SHAPE_SINH_OVER_LINEAR = 0, GDS_SHAPE_COSH = 1 } gds_shape;

GDS_API const char* gds_shape_name(gds_shape shape);
GDS_API gds_status gds_candidate_value(gds_shape shape, double beta, double x, double* out);
GDS_API gds_status gds_candidate_log_value(gds_shape shape, double beta, double x, double* out);

typedef struct gds_match_result {
  gds_shape best;
  double beta;
  double max_abs_log_diff;
  double sinh_distance;
  double cosh_distance;
  int matched;
  int exploratory;
  int candidate_count;
} gds_match_result;

GDS_API gds_status gds_match(const gds_series* series, const gds_law* law, const double* x,
                             size_t n, gds_match_result* out);

/* ---- uniqueness conditions ---- */

typedef struct gds_condition {
  double lhs;
  double rhs;
  int holds;
  double margin;
} gds_condition;

GDS_API gds_status gds_main_condition(double alpha, double rho, int d, gds_condition* out);
GDS_API gds_status gds_selberg_sharp_condition(double q, double rho, int d, gds_condition* out);
GDS_API gds_status gds_dedekind_condition(double abs_disc, int n, double rho, gds_condition* out);

#ifdef __cplusplus
}
#endif

#endif  // GDS_GDS_H_
