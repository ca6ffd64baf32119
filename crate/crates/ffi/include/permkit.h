#ifndef PERMKIT_H
#define PERMKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. Zero is success.
typedef enum PkStatus {
  PK_STATUS_OK = 0,
  PK_STATUS_NULL_POINTER = 1,
  PK_STATUS_INVALID_ARGUMENT = 2,
  PK_STATUS_INVALID_PERMUTATION = 3,
  PK_STATUS_LENGTH_MISMATCH = 4,
  PK_STATUS_OUT_OF_RANGE = 5,
  PK_STATUS_VERIFICATION_FAILED = 6,
  PK_STATUS_INTERNAL = 7,
} PkStatus;

// Opaque growable code: a set of distinct permutations of one degree.
typedef struct PkCode PkCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread, or null. Valid until the next
// call into this library on the same thread.
const char *pk_last_error_message(void);

// Kendall tau distance between two permutations of length `n`.
//
// # Safety
// `p` and `q` must each point to `n` values; `out` must be writable.
enum PkStatus pk_kendall_distance(const uint32_t *p, const uint32_t *q, size_t n, uint32_t *out);

// New empty code of degree `n`, or null if `n` is zero or too large.
struct PkCode *pk_code_new(size_t n);

// Releases a code. Null is ignored.
//
// # Safety
// `code` must be null or come from this library and not be freed twice.
void pk_code_free(struct PkCode *code);

// Appends a permutation of the code's degree. Duplicates are rejected.
//
// # Safety
// `code` must be valid; `word` must point to `n` values where `n` is the code's degree.
enum PkStatus pk_code_push(struct PkCode *code, const uint32_t *word);

// Number of codewords.
//
// # Safety
// `code` must be valid and `out` writable.
enum PkStatus pk_code_len(const struct PkCode *code, size_t *out);

// Degree of the code.
//
// # Safety
// `code` must be valid and `out` writable.
enum PkStatus pk_code_degree(const struct PkCode *code, size_t *out);

// Copies codeword `index` into `word` as a 1-based array of the code's degree.
//
// # Safety
// `code` must be valid; `word` must have room for `n` values.
enum PkStatus pk_code_get(const struct PkCode *code, size_t index, uint32_t *word);

// Minimum pairwise distance. Fails with `INVALID_ARGUMENT` for fewer than two codewords.
//
// # Safety
// `code` must be valid and `out` writable.
enum PkStatus pk_code_min_distance(const struct PkCode *code, uint32_t *out);

// `OK` if every pair is at distance at least `d`, else `VERIFICATION_FAILED` with the
// offending pair in the error message.
//
// # Safety
// `code` must be valid.
enum PkStatus pk_code_verify(const struct PkCode *code, uint32_t d);

// The four-word code of degree `n >= 6`. The target distance goes to `distance`
// when it is non-null. Returns null on failure.
//
// # Safety
// `distance` must be null or writable.
struct PkCode *pk_construct_size4(size_t n, uint32_t *distance);

// Best known lower and upper bounds on `P(n, d)` as a JSON object.
//
// # Safety
// `out` must be writable.
enum PkStatus pk_bounds_json(uint64_t n, uint64_t d, bool table_mode, char **out);

// `|B(n, r)|` in decimal.
//
// # Safety
// `out` must be writable.
enum PkStatus pk_ball_size_decimal(size_t n, uint64_t r, char **out);

// Prime-degree upper bound on `P(n, 3)` at radius parameter `r`, in decimal.
// `table_mode` selects floor rounding of the subtracted term.
//
// # Safety
// `out` must be writable.
enum PkStatus pk_theorem2_upper(uint64_t n, uint64_t r, bool table_mode, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or come from this library and not be freed twice.
void pk_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERMKIT_H */
