#ifndef LCST_H
#define LCST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Admissibility modulation `e^{it/B1}`.
 */
#define LCST_VARIANT_B1 0

/**
 * Admissibility modulation `e^{it/(B1 a)}`.
 */
#define LCST_VARIANT_B1A 1

typedef enum LcstStatus {
  LCST_STATUS_OK = 0,
  LCST_STATUS_NULL_POINTER = 1,
  LCST_STATUS_INVALID_MATRIX = 2,
  LCST_STATUS_INVALID_ARGUMENT = 3,
  LCST_STATUS_INVALID_GRID = 4,
  LCST_STATUS_NUMERICAL_GUARD = 5,
  LCST_STATUS_IO = 6,
  LCST_STATUS_BUFFER_TOO_SMALL = 7,
  LCST_STATUS_PANIC = 8,
} LcstStatus;

typedef struct LcstPlane LcstPlane;

typedef struct LcstSignal LcstSignal;

typedef struct LcstWindow LcstWindow;

typedef struct LcstComplex {
  double re;
  double im;
} LcstComplex;

typedef struct LcstMatrix {
  double a;
  double b;
  double c;
  double d;
} LcstMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next failing call.
 */
const char *lcst_last_error_message(void);

/**
 * # Safety
 * `samples` must point to `n` values; `out` must be writable.
 */
enum LcstStatus lcst_signal_new(double t0,
                                double dt,
                                const struct LcstComplex *samples,
                                size_t n,
                                struct LcstSignal **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void lcst_signal_free(struct LcstSignal *s);

/**
 * # Safety
 * `s` must be a valid handle or null.
 */
size_t lcst_signal_len(const struct LcstSignal *s);

/**
 * # Safety
 * `s` must be a valid handle; `t0` and `dt` must be writable.
 */
enum LcstStatus lcst_signal_axis(const struct LcstSignal *s, double *t0, double *dt);

/**
 * # Safety
 * `out` must hold `cap` values.
 */
enum LcstStatus lcst_signal_copy_samples(const struct LcstSignal *s,
                                         struct LcstComplex *out,
                                         size_t cap);

/**
 * LCT on the input grid. `fast` selects the chirp-FFT path (power-of-two length).
 *
 * # Safety
 * `f` must be a valid handle; `out` must be writable.
 */
enum LcstStatus lcst_lct_forward(const struct LcstSignal *f,
                                 struct LcstMatrix m,
                                 bool fast,
                                 struct LcstSignal **out);

/**
 * # Safety
 * `f` must be a valid handle; `out` must be writable.
 */
enum LcstStatus lcst_lct_inverse(const struct LcstSignal *f,
                                 struct LcstMatrix m,
                                 bool fast,
                                 struct LcstSignal **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcstStatus lcst_window_gaussian(double sigma, struct LcstWindow **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcstStatus lcst_window_hann(double support, struct LcstWindow **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcstStatus lcst_window_haar(struct LcstWindow **out);

/**
 * # Safety
 * `w` must come from this library or be null.
 */
void lcst_window_free(struct LcstWindow *w);

/**
 * Forward LCST on `scale_count` geometric scales in `[a_min, a_max]` and
 * shifts `shift_start + j*shift_step`. Uses the FFT path when the shifts lie
 * on the signal grid.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum LcstStatus lcst_forward(const struct LcstSignal *f,
                             const struct LcstWindow *psi,
                             struct LcstMatrix m1,
                             struct LcstMatrix m2,
                             double a_min,
                             double a_max,
                             size_t scale_count,
                             double shift_start,
                             double shift_step,
                             size_t shift_count,
                             struct LcstPlane **out);

/**
 * Reconstruction onto the time grid of the analysed signal.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum LcstStatus lcst_inverse(const struct LcstPlane *plane,
                             const struct LcstWindow *psi,
                             struct LcstMatrix m1,
                             struct LcstMatrix m2,
                             double c_value,
                             struct LcstSignal **out);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void lcst_plane_free(struct LcstPlane *p);

/**
 * # Safety
 * `p` must be valid; `rows` and `cols` must be writable.
 */
enum LcstStatus lcst_plane_dims(const struct LcstPlane *p, size_t *rows, size_t *cols);

/**
 * Row-major copy, scales outer.
 *
 * # Safety
 * `out` must hold `cap` values.
 */
enum LcstStatus lcst_plane_copy_values(const struct LcstPlane *p,
                                       struct LcstComplex *out,
                                       size_t cap);

/**
 * Admissibility constant over `xi_count` probe frequencies and `steps`
 * log-spaced scales in `[a_min, a_max]`.
 *
 * # Safety
 * `xi` must hold `xi_count` values; `c_out` must be writable.
 */
enum LcstStatus lcst_admissibility(const struct LcstWindow *psi,
                                   struct LcstMatrix m1,
                                   struct LcstMatrix m2,
                                   const double *xi,
                                   size_t xi_count,
                                   double a_min,
                                   double a_max,
                                   size_t steps,
                                   int32_t variant,
                                   double *c_out);

/**
 * Largest QMF deviation over `u_points` samples of one period.
 *
 * # Safety
 * `c` must hold `n` values; `out` must be writable.
 */
enum LcstStatus lcst_mra_qmf_check(const struct LcstComplex *c,
                                   size_t n,
                                   int64_t offset,
                                   struct LcstMatrix m1,
                                   struct LcstMatrix m2,
                                   size_t u_points,
                                   double *out);

/**
 * Wavelet filter of a low-pass filter. The result has `n` coefficients
 * starting at `*d_offset`.
 *
 * # Safety
 * `c` must hold `n` values, `d` must hold `cap` values, `d_offset` must be writable.
 */
enum LcstStatus lcst_mra_derive_wavelet(const struct LcstComplex *c,
                                        size_t n,
                                        int64_t offset,
                                        struct LcstMatrix m1,
                                        struct LcstComplex *d,
                                        size_t cap,
                                        int64_t *d_offset);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCST_H */
