#ifndef HURWITZ_GA_H
#define HURWITZ_GA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_NULL_POINTER = 1,
  HG_STATUS_INVALID_ARGUMENT = 2,
  HG_STATUS_PARSE_ERROR = 3,
  HG_STATUS_SIGNATURE_MISMATCH = 4,
  HG_STATUS_NOT_FOUND = 5,
  HG_STATUS_INTERNAL = 6,
  HG_STATUS_PANIC = 7,
} HgStatus;

typedef enum HgVariant {
  HG_VARIANT_PLUS = 0,
  HG_VARIANT_MINUS = 1,
} HgVariant;

typedef enum HgInvolution {
  HG_INVOLUTION_REVERSION = 0,
  HG_INVOLUTION_INVERSION = 1,
  HG_INVOLUTION_CLIFFORD_CONJUGATION = 2,
  HG_INVOLUTION_FULL_GRADE_INVERSION = 3,
} HgInvolution;

typedef enum HgClass {
  HG_CLASS_R = 0,
  HG_CLASS_C = 1,
  HG_CLASS_CS = 2,
  HG_CLASS_H = 3,
  HG_CLASS_HS = 4,
  HG_CLASS_O = 5,
  HG_CLASS_OS = 6,
} HgClass;

/**
 * Opaque multivector handle.
 */
typedef struct HgMultivector HgMultivector;

/**
 * Opaque structure-constant table handle.
 */
typedef struct HgTable HgTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *hg_last_error_message(void);

/**
 * Library version, statically allocated.
 */
const char *hg_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hg_string_free(char *s);

/**
 * Parses `a0 + a1*e1 + ... + a7*e123` in G(p,q).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum HgStatus hg_multivector_parse(uint32_t p,
                                   uint32_t q,
                                   const char *text,
                                   struct HgMultivector **out);

/**
 * Builds a multivector from eight fractions `nums[i] / dens[i]` in the
 * coefficient order `1, e12, e23, e13, e1, e2, e3, e123`.
 *
 * # Safety
 * `nums` and `dens` must point to 8 readable values; `out` must be writable.
 */
enum HgStatus hg_multivector_from_coeffs(uint32_t p,
                                         uint32_t q,
                                         const int64_t *nums,
                                         const int64_t *dens,
                                         struct HgMultivector **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that has not been freed.
 */
void hg_multivector_free(struct HgMultivector *m);

/**
 * Text form, e.g. `1 - 2*e12 + 1/3*e123`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_multivector_to_string(const struct HgMultivector *m, char **out);

/**
 * `{"signature":[l1,l2,l3],"coeffs":[x0..x7]}` with coefficients as strings.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_multivector_to_json(const struct HgMultivector *m, char **out);

/**
 * Exact equality of two multivectors (including signature).
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum HgStatus hg_multivector_equal(const struct HgMultivector *a,
                                   const struct HgMultivector *b,
                                   bool *out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum HgStatus hg_geometric_product(const struct HgMultivector *a,
                                   const struct HgMultivector *b,
                                   struct HgMultivector **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum HgStatus hg_bullet_product(const struct HgMultivector *a,
                                const struct HgMultivector *b,
                                enum HgVariant v,
                                struct HgMultivector **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_involution(const struct HgMultivector *a,
                            enum HgInvolution which,
                            struct HgMultivector **out);

/**
 * Octonionic norm as an exact fraction string (`p` or `p/q`).
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_octonion_norm(const struct HgMultivector *a, enum HgVariant v, char **out);

/**
 * `O` or `Os` for the bullet algebra on G(p,q).
 *
 * # Safety
 * `out` must be writable.
 */
enum HgStatus hg_classify(uint32_t p, uint32_t q, enum HgVariant v, enum HgClass *out);

/**
 * Builds a table from a spec: a class name, `ga:p,q`, `bullet:p,q:+|-` or
 * `biq:C|Cs,H|Hs`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HgStatus hg_table_build(const char *spec, struct HgTable **out);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void hg_table_free(struct HgTable *t);

/**
 * Dimension of the table; 0 for a null handle.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t hg_table_dim(const struct HgTable *t);

/**
 * `e_i e_j = sign · e_index`.
 *
 * # Safety
 * `t` must be a live handle; `index` and `sign` must be writable.
 */
enum HgStatus hg_table_entry(const struct HgTable *t,
                             size_t i,
                             size_t j,
                             size_t *index,
                             int8_t *sign);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_table_to_json(const struct HgTable *t, char **out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum HgStatus hg_table_to_csv(const struct HgTable *t, char **out);

/**
 * Searches a signed-basis isomorphism and writes it as JSON
 * `{source, target, map}`. Returns `NotFound` when none exists.
 *
 * # Safety
 * `source`, `target` must be live handles; `out` must be writable.
 */
enum HgStatus hg_find_isomorphism(const struct HgTable *source,
                                  const struct HgTable *target,
                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HURWITZ_GA_H */
