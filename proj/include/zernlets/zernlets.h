/* C interface for the zernlets library.
 *
 * All functions return zl_status; ZL_OK is 0.  On failure a human-readable
 * message is available from zl_last_error() until the next call on the same
 * thread.  Objects returned through zl_*_create/read/fit functions are owned
 * by the caller and released with the matching zl_*_free (safe on NULL).
 */
#ifndef ZERNLETS_H
#define ZERNLETS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ZL_BUILDING_SHARED)
#define ZL_API __declspec(dllexport)
#else
#define ZL_API __declspec(dllimport)
#endif
#else
#define ZL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zl_status {
  ZL_OK = 0,
  ZL_BAD_ARGUMENT = 1,
  ZL_IO_ERROR = 2,
  ZL_NUMERIC_ERROR = 3,
  ZL_INTERNAL_ERROR = 4
} zl_status;

typedef enum zl_surface_kind {
  ZL_SURFACE_NORMAL = 0,
  ZL_SURFACE_ASTIGMATISM = 1,
  ZL_SURFACE_KERATOCONUS = 2
} zl_surface_kind;

typedef enum zl_point_strategy {
  ZL_POINTS_FEKETE = 0,
  ZL_POINTS_RANDOM = 1
} zl_point_strategy;

typedef struct zl_samples zl_samples;
typedef struct zl_fit zl_fit;
typedef struct zl_decomposition zl_decomposition;
typedef struct zl_validation zl_validation;

/* Library version, e.g. "0.1.0". */
ZL_API const char* zl_version(void);

/* Message of the most recent failure on this thread ("" if none). */
ZL_API const char* zl_last_error(void);

/* ---- synthetic surfaces ------------------------------------------------ */

typedef struct zl_synth_params {
  double cap_radius;      /* sphere radius in disk units, >= 1 */
  double astig_amplitude; /* cylinder height */
  double astig_axis;      /* cylinder axis, radians */
  double bump_amplitude;  /* cone height */
  double bump_sigma;      /* cone width (Gaussian sigma), > 0 */
  double bump_rho;        /* cone center radius, in [0, 1) */
  double bump_theta;      /* cone center angle, radians */
  double noise_sigma;     /* measurement noise sigma, >= 0 */
} zl_synth_params;

ZL_API void zl_synth_params_default(zl_synth_params* params);

ZL_API zl_status zl_synth_samples(zl_surface_kind kind,
                                  const zl_synth_params* params, /* NULL = defaults */
                                  uint64_t seed, int count, zl_samples** out);

/* ---- sample sets ------------------------------------------------------- */

/* Reads a CSV with header `r,theta,z` or `x,y,z`.  With normalize nonzero,
 * radii are rescaled by the maximum radius; otherwise radii beyond the unit
 * disk are an error. */
ZL_API zl_status zl_samples_read(const char* path, int normalize, zl_samples** out);
ZL_API zl_status zl_samples_write(const zl_samples* samples, const char* path);
ZL_API zl_status zl_samples_count(const zl_samples* samples, int* out);
/* New sample set with the best-fit sphere height removed from each value.
 * Isolates local shape on cap-dominated surfaces before fitting. */
ZL_API zl_status zl_samples_subtract_sphere(const zl_samples* samples,
                                            zl_samples** out);
ZL_API void zl_samples_free(zl_samples* samples);

/* ---- point sets -------------------------------------------------------- */

/* Writes the ring-structured node family of the given degree (CSV header
 * `j,rho,theta`). */
ZL_API zl_status zl_write_regular_points(int degree, const char* path);

/* Writes the parameter points of one detail level. */
ZL_API zl_status zl_write_wavelet_points(int level, zl_point_strategy strategy,
                                         uint64_t seed, const char* path);

/* ---- least-squares fits ------------------------------------------------ */

ZL_API zl_status zl_fit_samples(const zl_samples* samples, int degree, zl_fit** out);
ZL_API zl_status zl_fit_degree(const zl_fit* fit, int* out);
ZL_API zl_status zl_fit_stats(const zl_fit* fit, double* residual_l2,
                              double* residual_rms, double* condition);
/* CSV header `j,n,m,A,B` (cosine/sine coefficients per mode). */
ZL_API zl_status zl_fit_write_coeffs(const zl_fit* fit, const char* path);
/* JSON: degree, basis_size, sample_count, residual_l2, residual_rms,
 * design_condition. */
ZL_API zl_status zl_fit_write_summary(const zl_fit* fit, const char* path);
/* Writes `x,y,value` rows of the fitted surface minus its best-fit sphere on
 * a polar grid with `res` rings.  `samples` must be the set the fit used. */
ZL_API zl_status zl_fit_write_difference_grid(const zl_fit* fit,
                                              const zl_samples* samples,
                                              int res, const char* path);
ZL_API void zl_fit_free(zl_fit* fit);

/* ---- multiscale decomposition ------------------------------------------ */

/* Splits a fit of even degree N into the constant component plus detail
 * levels 1, 2, 4, ..., N/2. */
ZL_API zl_status zl_decompose(const zl_fit* fit, zl_point_strategy strategy,
                              uint64_t seed, zl_decomposition** out);
ZL_API zl_status zl_decomposition_v0(const zl_decomposition* d, double* out);
ZL_API zl_status zl_decomposition_level_count(const zl_decomposition* d, int* out);
/* Level index, dimension and coefficient energy (sum of squared magnitudes)
 * of one detail level. */
ZL_API zl_status zl_decomposition_level_info(const zl_decomposition* d, int index,
                                             int* level, int* dimension,
                                             double* energy);
/* Largest-magnitude detail coefficients, strongest first.  Fills up to `k`
 * entries of each non-NULL array with the level, parameter point (mu =
 * radius, omega = angle) and magnitude; *written receives the count. */
ZL_API zl_status zl_decomposition_top_coefficients(const zl_decomposition* d,
                                                   int k, int* levels, double* mu,
                                                   double* omega, double* magnitude,
                                                   int* written);
/* Sampled residuals of both representations of the fitted surface: the
 * direct polynomial and the reassembled multiscale expansion.  `samples`
 * must be the set the fit used. */
ZL_API zl_status zl_decomposition_residuals(const zl_decomposition* d,
                                            const zl_samples* samples,
                                            double* zernike_l2, double* wavelet_l2);
/* CSV header `level,slot,mu,omega,re,im`; first row is the constant. */
ZL_API zl_status zl_decomposition_write(const zl_decomposition* d, const char* path);
/* Reassembles the expansion and writes `x,y,value` rows on a polar grid. */
ZL_API zl_status zl_decomposition_write_recon_grid(const zl_decomposition* d,
                                                   int res, const char* path);
ZL_API void zl_decomposition_free(zl_decomposition* d);

/* ---- self-validation --------------------------------------------------- */

/* Runs the built-in invariant suites up to max_degree.  inject_fault nonzero
 * corrupts intermediate data on purpose; the suites must then report
 * failure (negative control). */
ZL_API zl_status zl_validate(int max_degree, int inject_fault, zl_validation** out);
ZL_API zl_status zl_validation_passed(const zl_validation* v, int* out);
ZL_API zl_status zl_validation_suite_count(const zl_validation* v, int* out);
/* Copies the suite name into name_buf (truncated to buf_len - 1 chars). */
ZL_API zl_status zl_validation_suite(const zl_validation* v, int index,
                                     char* name_buf, size_t buf_len,
                                     double* max_error, double* tolerance,
                                     int* passed);
ZL_API zl_status zl_validation_write(const zl_validation* v, const char* path);
ZL_API void zl_validation_free(zl_validation* v);

#ifdef __cplusplus
}
#endif

#endif /* ZERNLETS_H */
