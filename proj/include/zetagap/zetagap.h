/*
 * zetagap C API.
 *
 * Every call returns a zg_status. On failure the thread-local message from
 * zg_last_error() describes the problem; input errors also set
 * zg_last_error_line(). Output pointers are written only on ZG_OK, except
 * ZG_ERR_TOLERANCE which still stores the best quadrature estimate.
 *
 * Tables and sieves are opaque handles owned by the caller and released
 * with the matching *_destroy function.
 */
#ifndef ZETAGAP_H
#define ZETAGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZETAGAP_BUILDING)
#    define ZG_API __declspec(dllexport)
#  else
#    define ZG_API __declspec(dllimport)
#  endif
#else
#  define ZG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zg_status {
  ZG_OK = 0,
  ZG_ERR_DOMAIN = 1,
  ZG_ERR_TOLERANCE = 2,
  ZG_ERR_NO_CERTIFICATE = 3,
  ZG_ERR_PARSE = 4,
  ZG_ERR_MONOTONICITY = 5,
  ZG_ERR_EMPTY = 6,
  ZG_ERR_RANGE = 7,
  ZG_ERR_RESOURCE = 8,
  ZG_ERR_INVALID_SCHEME = 9,
  ZG_ERR_IO = 10,
  ZG_ERR_NULL_ARGUMENT = 11,
  ZG_ERR_INTERNAL = 99
} zg_status;

ZG_API const char* zg_status_name(zg_status status);
ZG_API const char* zg_last_error(void);
ZG_API size_t zg_last_error_line(void);
ZG_API const char* zg_version(void);

typedef struct zg_quad {
  double abs_tol;
  int max_subdivisions;
} zg_quad;

/* abs_tol 1e-9, max_subdivisions 10000 */
ZG_API zg_quad zg_quad_default(void);

typedef struct zg_opt_result {
  double arg_star;
  double val_star;
  double bracket_lo;
  double bracket_hi;
  int boundary_warning;
} zg_opt_result;

/* ---- numerics ---------------------------------------------------------- */

ZG_API zg_status zg_exp_integral_e1(double x, double* out);

/* ---- integral forms of h+/h- ------------------------------------------ */

typedef enum zg_kind { ZG_KIND_PLUS = 0, ZG_KIND_MINUS = 1 } zg_kind;

ZG_API zg_status zg_h_plus(double c, double ell, double delta, const zg_quad* quad, double* out);
ZG_API zg_status zg_h_minus(double c, double ell, double delta, const zg_quad* quad, double* out);
ZG_API zg_status zg_find_large_gap_c(int r, double ell, double delta, const zg_quad* quad,
                                     double* out);
ZG_API zg_status zg_find_small_gap_c(int r, double ell, double delta, const zg_quad* quad,
                                     double* out);

typedef struct zg_table_row {
  int r;
  double ell;
  double c;
  double h_value;
  zg_status status; /* ZG_ERR_NO_CERTIFICATE when the row could not be certified */
} zg_table_row;

/* Fills out[0..count). Per-row failures are reported in each row's status. */
ZG_API zg_status zg_build_table(zg_kind kind, const int* r, const double* ell, size_t count,
                                double delta, const zg_quad* quad, zg_table_row* out);

/* ---- closed-form bounds ------------------------------------------------ */

typedef enum zg_bound_mode { ZG_MODE_AS_PRINTED = 0, ZG_MODE_RIGOROUS = 1 } zg_bound_mode;

typedef struct zg_scheme {
  int k;
  zg_bound_mode mode;
} zg_scheme;

typedef struct zg_theta_result {
  double b_star;
  double value;
  zg_scheme scheme;
  double bracket_lo;
  double bracket_hi;
  int boundary_warning;
  int valid;
} zg_theta_result;

/* Writes k slopes to out. */
ZG_API zg_status zg_chord_slopes(int k, double* out);
ZG_API zg_status zg_theta_objective(double b, zg_scheme scheme, double* out);
ZG_API zg_status zg_vartheta_objective(double b, zg_scheme scheme, double* out);
ZG_API zg_status zg_optimize_theta(zg_scheme scheme, double b_lo, double b_hi,
                                   zg_theta_result* out);
ZG_API zg_status zg_optimize_vartheta(zg_scheme scheme, double b_lo, double b_hi,
                                      zg_theta_result* out);
ZG_API zg_status zg_certified_h_plus_upper(double c, double ell, double delta, zg_scheme scheme,
                                           double* out);

/* ---- large-r regime ---------------------------------------------------- */

ZG_API zg_status zg_asymptotic_objective(double B, double* out);
ZG_API zg_status zg_asymptotic_integral_closed(double B, double delta, double* out);
ZG_API zg_status zg_asymptotic_integral(double B, double delta, const zg_quad* quad, double* out);
ZG_API zg_status zg_tail_e(double r, double B, double delta, const zg_quad* quad, double* out);
ZG_API zg_status zg_optimize_b(double lo, double hi, zg_opt_result* out);
ZG_API zg_status zg_h_plus_large_r(double r, double B, double delta, double theta,
                                   const zg_quad* quad, double* out);
ZG_API zg_status zg_h_minus_large_r(double r, double B, double delta, double vartheta,
                                    const zg_quad* quad, double* out);
ZG_API zg_status zg_finite_r_correction(double r, double B, double delta, const zg_quad* quad,
                                        double* out);
ZG_API zg_status zg_negligible_correction_r(double B, double delta, double tol,
                                            const zg_quad* quad, double* out);

/* ---- arithmetic -------------------------------------------------------- */

typedef struct zg_sieve zg_sieve;

/* budget_bytes == 0 selects the library default (1 GiB). */
ZG_API zg_status zg_sieve_create(uint64_t X, size_t budget_bytes, zg_sieve** out);
ZG_API void zg_sieve_destroy(zg_sieve* sieve);
ZG_API zg_status zg_sieve_limit(const zg_sieve* sieve, uint64_t* out);
ZG_API zg_status zg_sieve_prime_count(const zg_sieve* sieve, uint64_t* out);
ZG_API zg_status zg_sieve_prime_power_count(const zg_sieve* sieve, uint64_t* out);
/* Copies up to capacity prime powers (ascending); *written receives the count. */
ZG_API zg_status zg_sieve_prime_powers(const zg_sieve* sieve, uint32_t* out, size_t capacity,
                                       size_t* written);
ZG_API zg_status zg_smallest_prime_factor(const zg_sieve* sieve, uint64_t n, uint32_t* out);
ZG_API zg_status zg_d_ell(const zg_sieve* sieve, uint64_t n, int ell, uint64_t* out);
ZG_API zg_status zg_liouville(const zg_sieve* sieve, uint64_t n, int* out);
ZG_API zg_status zg_von_mangoldt(const zg_sieve* sieve, uint64_t k, double* out);
ZG_API zg_status zg_g_kernel(uint64_t k, double c, double logT, double* out);

typedef struct zg_discrete_params {
  uint64_t X;
  double logT;
  int ell;
  zg_kind sign;
  double c;
} zg_discrete_params;

typedef struct zg_discrete_result {
  double h;
  double numerator;
  double denominator;
} zg_discrete_result;

ZG_API zg_status zg_h_discrete(const zg_sieve* sieve, const zg_discrete_params* params,
                               zg_discrete_result* out);

/* ---- zero tables ------------------------------------------------------- */

typedef struct zg_zero_table zg_zero_table;

ZG_API zg_status zg_zeros_load_file(const char* path, zg_zero_table** out);
ZG_API zg_status zg_zeros_load_buffer(const char* data, size_t size, const char* source,
                                      zg_zero_table** out);
ZG_API void zg_zeros_destroy(zg_zero_table* table);
ZG_API zg_status zg_zeros_size(const zg_zero_table* table, size_t* out);
/* 1-based index. */
ZG_API zg_status zg_zeros_get(const zg_zero_table* table, size_t n, double* out);

typedef struct zg_gap_report {
  int r;
  double max_norm;
  size_t argmax;
  double min_norm;
  size_t argmin;
  size_t count_above;
  size_t count_below;
  double theta_used;
  double vartheta_used;
  size_t n_gaps;
} zg_gap_report;

typedef struct zg_counting {
  double T;
  size_t empirical;
  double main_term;
  double refined_term;
} zg_counting;

ZG_API double zg_default_theta(void);
ZG_API double zg_default_vartheta(void);
ZG_API zg_status zg_normalized_gap(const zg_zero_table* table, size_t n, int r, double* out);
ZG_API zg_status zg_gap_report_compute(const zg_zero_table* table, int r, double theta,
                                       double vartheta, zg_gap_report* out);
ZG_API zg_status zg_counting_check(const zg_zero_table* table, double T, zg_counting* out);

#ifdef __cplusplus
}
#endif

#endif /* ZETAGAP_H */
