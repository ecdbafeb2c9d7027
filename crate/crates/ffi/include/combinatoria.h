#ifndef COMBINATORIA_H
#define COMBINATORIA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CombHeadMode {
  COMB_HEAD_MODE_LOOSE = 0,
  COMB_HEAD_MODE_EXACT = 1,
  COMB_HEAD_MODE_SETWISE = 2,
} CombHeadMode;

/**
 * Outcome of a call. `COMB_STATUS_OK` is zero.
 */
typedef enum CombStatus {
  COMB_STATUS_OK = 0,
  COMB_STATUS_INVALID_ARGUMENT = 1,
  COMB_STATUS_INVALID_DEGREE = 2,
  COMB_STATUS_INCOMPATIBLE_DEGREES = 3,
  COMB_STATUS_NOT_A_BIJECTION = 4,
  COMB_STATUS_PARSE = 5,
  COMB_STATUS_INVALID_CYCLE_TYPE = 6,
  COMB_STATUS_ENUMERATION_TOO_LARGE = 7,
  COMB_STATUS_INVALID_HEAD = 8,
  COMB_STATUS_GROUND_SET_MISMATCH = 9,
  COMB_STATUS_NULL_POINTER = 10,
  COMB_STATUS_INVALID_UTF8 = 11,
  COMB_STATUS_BUFFER_TOO_SMALL = 12,
  COMB_STATUS_PANIC = 99,
} CombStatus;

typedef struct CombCaputIter CombCaputIter;

typedef struct CombCaputSpec CombCaputSpec;

typedef struct CombPermutation CombPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Owned by the library; valid until the next call.
 */
const char *comb_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed. NULL is ignored.
 */
void comb_string_free(char *s);

/**
 * Parses one-line (`[2,1,3]`), cycle (`(12)`) or letter (`bac`) notation.
 * `degree` 0 infers the degree from the text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum CombStatus comb_permutation_parse(const char *text,
                                       size_t degree,
                                       struct CombPermutation **out);

/**
 * # Safety
 * `points` must hold `len` readable values; `out` must be writable.
 */
enum CombStatus comb_permutation_from_one_line(const size_t *points,
                                               size_t len,
                                               struct CombPermutation **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed. NULL is ignored.
 */
void comb_permutation_free(struct CombPermutation *p);

/**
 * Degree of `p`, or 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t comb_permutation_degree(const struct CombPermutation *p);

/**
 * `p ∘ q`: `q` is applied first.
 *
 * # Safety
 * `p` and `q` must be live handles; `out` must be writable.
 */
enum CombStatus comb_permutation_compose(const struct CombPermutation *p,
                                         const struct CombPermutation *q,
                                         struct CombPermutation **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CombStatus comb_permutation_inverse(const struct CombPermutation *p,
                                         struct CombPermutation **out);

/**
 * Canonical cycle form, e.g. `(1)(3)(5)(246)`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CombStatus comb_permutation_cycles(const struct CombPermutation *p, char **out);

/**
 * Writes the one-line images into `buf`, which must hold `degree` values.
 *
 * # Safety
 * `p` must be a live handle; `buf` must hold `len` writable values.
 */
enum CombStatus comb_permutation_one_line(const struct CombPermutation *p, size_t *buf, size_t len);

/**
 * Writes α₁…αₙ into `alpha`, which must hold `degree` values.
 *
 * # Safety
 * `p` must be a live handle; `alpha` must hold `len` writable values.
 */
enum CombStatus comb_permutation_cycle_type(const struct CombPermutation *p,
                                            size_t *alpha,
                                            size_t len);

/**
 * Size of the conjugacy class of Sₙ with cycle type `alpha[0..len]`.
 *
 * # Safety
 * `alpha` must hold `len` readable values; `out` must be writable.
 */
enum CombStatus comb_class_order(size_t degree, const size_t *alpha, size_t len, char **out);

/**
 * p(n).
 *
 * # Safety
 * `out` must be writable.
 */
enum CombStatus comb_count_partitions(size_t n, char **out);

/**
 * Partitions of `n` into exactly two parts.
 */
uint64_t comb_two_part_count(uint64_t n);

/**
 * Arrangements of `m` things with none in its own place.
 *
 * # Safety
 * `out` must be writable.
 */
enum CombStatus comb_derangements(size_t m, char **out);

/**
 * Points of the consanguinity tree at `gradus`: 2ⁿ·(n+1).
 *
 * # Safety
 * `out` must be writable.
 */
enum CombStatus comb_personae_count(size_t gradus, char **out);

/**
 * Builds a head specification from text such as `1=a,3=c`.
 *
 * # Safety
 * `head` must be a NUL-terminated string; `out` must be writable.
 */
enum CombStatus comb_caput_spec_new(size_t degree,
                                    const char *head,
                                    enum CombHeadMode mode,
                                    struct CombCaputSpec **out);

/**
 * # Safety
 * `spec` must come from this library and not have been freed. NULL is ignored.
 */
void comb_caput_spec_free(struct CombCaputSpec *spec);

/**
 * # Safety
 * `spec` must be a live handle; `out` must be writable.
 */
enum CombStatus comb_caput_count(const struct CombCaputSpec *spec, char **out);

/**
 * Starts a lexicographic enumeration. The enumerator does not borrow
 * `spec`, which may be freed afterwards.
 *
 * # Safety
 * `spec` must be a live handle; `out` must be writable.
 */
enum CombStatus comb_caput_iter_new(const struct CombCaputSpec *spec, struct CombCaputIter **out);

/**
 * Stores the next arrangement in `*out`, or NULL when exhausted.
 *
 * # Safety
 * `iter` must be a live handle; `out` must be writable.
 */
enum CombStatus comb_caput_iter_next(struct CombCaputIter *iter, struct CombPermutation **out);

/**
 * # Safety
 * `iter` must come from this library and not have been freed. NULL is ignored.
 */
void comb_caput_iter_free(struct CombCaputIter *iter);

/**
 * Runs every closed form against brute force up to `max_n` (at most 9).
 * `report`, if not NULL, receives one line per claim.
 *
 * # Safety
 * `all_pass` must be writable; `report` must be NULL or writable.
 */
enum CombStatus comb_verify(size_t max_n, bool *all_pass, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMBINATORIA_H */
