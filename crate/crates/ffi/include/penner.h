#ifndef PENNER_H
#define PENNER_H

/* Generated by cbindgen from crates/ffi/src; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Pass as the size to work with a symbolic matrix size `N`.
 */
#define PENNER_SYMBOLIC_SIZE 0

typedef enum PennerChiKind {
  PENNER_CHI_KIND_COMPLEX = 0,
  PENNER_CHI_KIND_REAL = 1,
} PennerChiKind;

typedef enum PennerContinuum {
  PENNER_CONTINUUM_PENNER = 0,
  PENNER_CONTINUUM_NONORIENTABLE = 1,
  PENNER_CONTINUUM_SYMPLECTIC = 2,
  PENNER_CONTINUUM_ORTHOGONAL = 3,
} PennerContinuum;

typedef enum PennerModel {
  PENNER_MODEL_HERMITIAN_TRIPLE = 0,
  PENNER_MODEL_SYMPLECTIC_TRIPLE = 1,
  PENNER_MODEL_HERMITIAN = 2,
  PENNER_MODEL_SYMPLECTIC = 3,
  PENNER_MODEL_ORTHOGONAL = 4,
  PENNER_MODEL_NONORIENTABLE_PRODUCT = 5,
  PENNER_MODEL_NONORIENTABLE_GF = 6,
  PENNER_MODEL_CLOSED_FORM_AS_PRINTED = 7,
  PENNER_MODEL_CLOSED_FORM_RECIPROCAL = 8,
  PENNER_MODEL_STIRLING_TAIL = 9,
} PennerModel;

typedef enum PennerStatus {
  PENNER_STATUS_OK = 0,
  PENNER_STATUS_NULL_POINTER = 1,
  PENNER_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Input outside the mathematical domain (unstable cell, mu >= 2N, ...).
   */
  PENNER_STATUS_DOMAIN = 3,
  /**
   * The operation needs a concrete matrix size.
   */
  PENNER_STATUS_SYMBOLIC_SIZE = 4,
  PENNER_STATUS_PARSE = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  PENNER_STATUS_INTERNAL = 6,
} PennerStatus;

/**
 * Opaque series in `mu`, with any notes produced while building it.
 */
typedef struct PennerMuSeries PennerMuSeries;

/**
 * Opaque identity-verification report.
 */
typedef struct PennerReport PennerReport;

/**
 * Opaque truncated series in `t`.
 */
typedef struct PennerTSeries PennerTSeries;

/**
 * Outcome of a double-scaling comparison.
 */
typedef struct PennerResidual {
  uint64_t n;
  double mu;
  double t;
  uint32_t q_max;
  double residual;
  double target;
  double abs_error;
} PennerResidual;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL after a
 * success. Owned by the library; valid until the next call on this thread.
 */
const char *penner_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void penner_string_free(char *s);

/**
 * Euler characteristic as an exact `"num/den"` string.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum PennerStatus penner_chi(enum PennerChiKind kind,
                             uint32_t genus_index,
                             uint32_t punctures,
                             char **out);

/**
 * Builds a generating function to order `order`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum PennerStatus penner_tseries_build(enum PennerModel model,
                                       uint64_t size,
                                       size_t order,
                                       struct PennerTSeries **out);

/**
 * Truncation order of a series; 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t penner_tseries_order(const struct PennerTSeries *s);

/**
 * Series as JSON; free the string with [`penner_string_free`].
 *
 * # Safety
 * `s` must be NULL or a live handle; `out` must be valid for one write.
 */
enum PennerStatus penner_tseries_to_json(const struct PennerTSeries *s, char **out);

/**
 * # Safety
 * `s` must be NULL or a handle from [`penner_tseries_build`], not yet freed.
 */
void penner_tseries_free(struct PennerTSeries *s);

/**
 * Verifies the identity named by `identity` (CLI token such as `"eq17"`).
 *
 * # Safety
 * `identity` must be a NUL-terminated string; `out` must be valid for one write.
 */
enum PennerStatus penner_verify(const char *identity,
                                uint64_t size,
                                size_t order,
                                struct PennerReport **out);

/**
 * Whether every coefficient matched; false for NULL.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
bool penner_report_matched(const struct PennerReport *r);

/**
 * # Safety
 * `r` must be NULL or a live handle.
 */
size_t penner_report_mismatch_count(const struct PennerReport *r);

/**
 * # Safety
 * `r` must be NULL or a live handle; `out` must be valid for one write.
 */
enum PennerStatus penner_report_to_json(const struct PennerReport *r, char **out);

/**
 * # Safety
 * `r` must be NULL or a handle from [`penner_verify`], not yet freed.
 */
void penner_report_free(struct PennerReport *r);

/**
 * Continuum free energy; `g_max` is used by the orientable part, `k_max`
 * by the non-orientable part.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum PennerStatus penner_continuum_build(enum PennerContinuum model,
                                         uint32_t g_max,
                                         uint32_t k_max,
                                         struct PennerMuSeries **out);

/**
 * Number of terms; 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t penner_museries_len(const struct PennerMuSeries *s);

/**
 * Number of discrepancy notes; 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t penner_museries_note_count(const struct PennerMuSeries *s);

/**
 * # Safety
 * `s` must be NULL or a live handle; `out` must be valid for one write.
 */
enum PennerStatus penner_museries_to_json(const struct PennerMuSeries *s, char **out);

/**
 * # Safety
 * `s` must be NULL or a handle from [`penner_continuum_build`], not yet freed.
 */
void penner_museries_free(struct PennerMuSeries *s);

/**
 * Finite-`N` non-orientable free energy at `mu` against its continuum tail.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum PennerStatus penner_double_scaling(uint64_t n,
                                        double mu,
                                        uint32_t q_max,
                                        struct PennerResidual *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PENNER_H */
