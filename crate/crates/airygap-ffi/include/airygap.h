#ifndef AIRYGAP_H
#define AIRYGAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum AirygapStatus {
  AIRYGAP_STATUS_OK = 0,
  // A pointer argument was null.
  AIRYGAP_STATUS_NULL_ARGUMENT = 1,
  // Parameter validation failed.
  AIRYGAP_STATUS_VALIDATION = 2,
  // The solver or discretization failed.
  AIRYGAP_STATUS_SOLVER = 3,
  // A tolerance contract was violated.
  AIRYGAP_STATUS_TOLERANCE = 4,
  // A panic was caught at the boundary.
  AIRYGAP_STATUS_PANIC = 5,
} AirygapStatus;

// Opaque multi-interval partition (x, s).
typedef struct AirygapPartition AirygapPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copy the last error message of this thread into `buf` (truncated,
// always NUL-terminated); returns the full message length in bytes.
//
// # Safety
// `buf` must point to `len` writable bytes, or be null with `len` 0.
size_t airygap_last_error(char *buf, size_t len);

// Create a partition from `k` interval endpoints (strictly decreasing)
// and `k` weights in [0, 1]; the handle must be released with
// `airygap_partition_free`.
//
// # Safety
// `x` and `s` must point to `k` readable doubles; `out` must be a
// valid writable pointer.
enum AirygapStatus airygap_partition_new(const double *x,
                                         const double *s,
                                         size_t k,
                                         struct AirygapPartition **out);

// Release a partition handle; null is ignored.
//
// # Safety
// `p` must come from `airygap_partition_new` and not be freed twice.
void airygap_partition_free(struct AirygapPartition *p);

// F(x; s) with the default scheme; also reports log F and the embedded
// discretization error estimate (either out-pointer may be null).
//
// # Safety
// `p` must be a live partition handle; `out_det` must be writable.
enum AirygapStatus airygap_fredholm_det(const struct AirygapPartition *p,
                                        double *out_det,
                                        double *out_log_det,
                                        double *out_err_est);

// log F(x; s) through the coupled Painlevé II route (Airy data
// anchored at `t`, integrator tolerance `tol`).
//
// # Safety
// `p` must be a live partition handle; `out` must be writable.
enum AirygapStatus airygap_pii_log_det(const struct AirygapPartition *p,
                                       double t,
                                       double tol,
                                       double *out);

// P(zeta_ell < x) for the ell-th largest particle.
//
// # Safety
// `out` must be writable.
enum AirygapStatus airygap_kth_largest_cdf(size_t ell, double x, double *out);

// P(no particles in (x2, x1)).
//
// # Safety
// `out` must be writable.
enum AirygapStatus airygap_gap_probability(double x2, double x1, double *out);

// P(zeta_1 - zeta_2 > sigma).
//
// # Safety
// `out` must be writable.
enum AirygapStatus airygap_spacing_survival(double sigma, double *out);

// P(zeta_1 + zeta_2 < sigma).
//
// # Safety
// `out` must be writable.
enum AirygapStatus airygap_sum_two_cdf(double sigma, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AIRYGAP_H */
