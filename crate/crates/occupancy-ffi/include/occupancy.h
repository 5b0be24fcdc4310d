/* C interface to the occupancy library: exact occupancy weights, entropies, and MaxProb sweeps. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum OccStatus {
  OCC_STATUS_OK = 0,
  // A pointer argument was null.
  OCC_STATUS_NULL_POINTER = 1,
  // Arguments violate a precondition (empty realization, g = 0, ...).
  OCC_STATUS_INVALID_ARGUMENT = 2,
  // Input exceeds a size guard or the enumeration cap.
  OCC_STATUS_LIMIT_EXCEEDED = 3,
  // Index out of range.
  OCC_STATUS_OUT_OF_RANGE = 4,
} OccStatus;

// Statistic selector for [`occ_maxprob_run`].
typedef enum OccStatistic {
  // Distinguishable states (ordered occupancies).
  OCC_STATISTIC_MULTINOMIAL = 0,
  // Indistinguishable states.
  OCC_STATISTIC_DI = 1,
  // Indistinguishable states with g sub-states each.
  OCC_STATISTIC_DI_DEGENERATE = 2,
} OccStatistic;

// Opaque MaxProb result handle.
typedef struct OccMaxProb OccMaxProb;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Stirling number of the second kind `{n, k}` as a decimal string.
//
// # Safety
// `out` must be a valid pointer; the result string must be released with
// [`occ_string_free`].
enum OccStatus occ_stirling2(uint64_t n, uint64_t k, char **out);

// Incomplete Bell number `B(n, s)` as a decimal string.
//
// # Safety
// As [`occ_stirling2`].
enum OccStatus occ_bell_incomplete(uint64_t n, uint64_t s, char **out);

// D:I weight of the occupancy multiset `parts[0..len]`.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be valid.
enum OccStatus occ_weight_di(const uint64_t *parts, uintptr_t len, char **out);

// Equally degenerate D:I weight with `g` sub-states per state.
//
// # Safety
// As [`occ_weight_di`].
enum OccStatus occ_weight_di_degenerate(const uint64_t *parts,
                                        uintptr_t len,
                                        uint64_t g,
                                        char **out);

// Multinomial weight of the ordered occupancy `slots[0..len]`.
//
// # Safety
// As [`occ_weight_di`].
enum OccStatus occ_weight_multinomial(const uint64_t *slots, uintptr_t len, char **out);

// Exact D:I entropy `(1/N) ln W` of the occupancy multiset, in nats.
//
// # Safety
// As [`occ_weight_di`]; `out` receives the entropy.
enum OccStatus occ_entropy_di(const uint64_t *parts, uintptr_t len, double *out);

// Exact equally degenerate D:I entropy, in nats.
//
// # Safety
// As [`occ_entropy_di`].
enum OccStatus occ_entropy_di_degenerate(const uint64_t *parts,
                                         uintptr_t len,
                                         uint64_t g,
                                         double *out);

// Shannon entropy of the empirical distribution of `counts[0..len]`.
//
// # Safety
// As [`occ_entropy_di`].
enum OccStatus occ_entropy_shannon(const uint64_t *counts, uintptr_t len, double *out);

// Runs a MaxProb sweep and returns an opaque result handle.
//
// `g` is only read for `DIDegenerate`. `max_space = 0` selects the
// default cap (10^7 realizations).
//
// # Safety
// `out` must be valid; the handle must be released with
// [`occ_maxprob_free`].
enum OccStatus occ_maxprob_run(enum OccStatistic statistic,
                               uint64_t n,
                               uint64_t s,
                               uint64_t g,
                               uint64_t max_space,
                               struct OccMaxProb **out);

// Number of argmax realizations in the handle.
//
// # Safety
// `handle` must be a live pointer from [`occ_maxprob_run`].
uintptr_t occ_maxprob_maxima_count(const struct OccMaxProb *handle);

// Shared weight of the argmax realizations, as a decimal string.
//
// # Safety
// As [`occ_maxprob_maxima_count`]; string freed via [`occ_string_free`].
enum OccStatus occ_maxprob_weight(const struct OccMaxProb *handle, char **out);

// Ensemble total weight (`B(N,s)`, `s^N`, or the degenerate total).
//
// # Safety
// As [`occ_maxprob_weight`].
enum OccStatus occ_maxprob_total_weight(const struct OccMaxProb *handle, char **out);

// Probability of each argmax realization. NaN on a null handle.
//
// # Safety
// As [`occ_maxprob_maxima_count`].
double occ_maxprob_probability(const struct OccMaxProb *handle);

// Exact entropy `(1/N) ln W` of each argmax realization. NaN on null.
//
// # Safety
// As [`occ_maxprob_maxima_count`].
double occ_maxprob_entropy(const struct OccMaxProb *handle);

// Number of occupancy entries in realization `index` (canonical parts
// for D:I, `s` slots for multinomial). Zero if out of range.
//
// # Safety
// As [`occ_maxprob_maxima_count`].
uintptr_t occ_maxprob_realization_len(const struct OccMaxProb *handle, uintptr_t index);

// Copies realization `index` into `buf[0..buf_len]`.
//
// # Safety
// `buf` must hold at least `buf_len` writable u64 slots, and `buf_len`
// must cover [`occ_maxprob_realization_len`] for the index.
enum OccStatus occ_maxprob_realization(const struct OccMaxProb *handle,
                                       uintptr_t index,
                                       uint64_t *buf,
                                       uintptr_t buf_len);

// Releases a MaxProb handle. Null is a no-op.
//
// # Safety
// `handle` must come from [`occ_maxprob_run`] and not be freed twice.
void occ_maxprob_free(struct OccMaxProb *handle);

// Releases a string allocated by this library. Null is a no-op.
//
// # Safety
// `s` must come from an occ_* out-parameter and not be freed twice.
void occ_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
