#ifndef SECTORPACK_H
#define SECTORPACK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum {
  SP_STATUS_OK = 0,
  SP_STATUS_NULL_POINTER = 1,
  SP_STATUS_INVALID_UTF8 = 2,
  SP_STATUS_PARSE = 3,
  SP_STATUS_INVALID_ARGUMENT = 4,
  SP_STATUS_ZERO_DISCRIMINANT = 5,
  SP_STATUS_NONZERO_DISCRIMINANT = 6,
  SP_STATUS_UNBOUNDED = 7,
  SP_STATUS_BUDGET_EXHAUSTED = 8,
  SP_STATUS_OVERFLOW = 9,
  SP_STATUS_DIVERGENT = 10,
  SP_STATUS_DEGENERATE = 11,
  SP_STATUS_PANIC = 12,
} SpStatus;

/**
 * Outcome kinds of [`sp_verify_prefix`].
 */
typedef enum {
  SP_VERIFY_KIND_VERIFIED = 0,
  SP_VERIFY_KIND_COLLISION = 1,
  SP_VERIFY_KIND_GAP = 2,
  SP_VERIFY_KIND_OUT_OF_RANGE = 3,
  SP_VERIFY_KIND_UNBOUNDED = 4,
} SpVerifyKind;

/**
 * Opaque affine cone.
 */
typedef struct SpCone SpCone;

/**
 * Opaque integer-valued quadratic.
 */
typedef struct SpPoly SpPoly;

/**
 * Opaque sector `S(α)`.
 */
typedef struct SpSector SpSector;

/**
 * Prefix verification result. Point fields are meaningful per `kind`:
 * `p`/`q` for a collision, `p` for an out-of-range point; `value` is the
 * collided, missing or negative value.
 */
typedef struct {
  int32_t kind;
  uint64_t verified_up_to;
  int64_t px;
  int64_t py;
  int64_t qx;
  int64_t qy;
  int64_t value;
} SpVerifyResult;

/**
 * A collision witness: `P(px, py) = P(qx, qy) = value`, with the points
 * `anchor ± (r, s)` on the line `r·y − s·x = i`.
 */
typedef struct {
  int64_t px;
  int64_t py;
  int64_t qx;
  int64_t qy;
  int64_t value;
  int64_t r;
  int64_t s;
  int64_t i;
  int64_t anchor_x;
  int64_t anchor_y;
} SpCollision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`). Returns the full message length excluding the NUL,
 * or 0 when there is none.
 */
size_t sp_last_error_message(char *buf, size_t len);

/**
 * Builds `A x(x−1)/2 + Bxy + C y(y−1)/2 + Dx + Ey + F` from `coeffs[6]`.
 */
SpStatus sp_poly_new(const int64_t *coeffs, SpPoly **out);

/**
 * Parses `"A B C D E F"` or a closed form such as `"x^2+y^2"`.
 */
SpStatus sp_poly_parse(const char *text, SpPoly **out);

void sp_poly_free(SpPoly *p);

/**
 * `P(x, y)`; `SP_STATUS_OVERFLOW` when the value leaves 64 bits.
 */
SpStatus sp_poly_eval(const SpPoly *p, int64_t x, int64_t y, int64_t *out);

/**
 * `B² − AC`.
 */
SpStatus sp_poly_discriminant(const SpPoly *p, int64_t *out);

/**
 * Parses a slope: `"p/q"`, `"inf"` or `"a+b*sqrt(d)"`.
 */
SpStatus sp_sector_parse(const char *text, SpSector **out);

void sp_sector_free(SpSector *s);

SpStatus sp_sector_contains(const SpSector *s, int64_t x, int64_t y, bool *out);

/**
 * Cone `apex + u·g1 + v·g2`; each argument is `"x,y"` with rational parts.
 */
SpStatus sp_cone_parse(const char *apex, const char *g1, const char *g2, SpCone **out);

void sp_cone_free(SpCone *c);

/**
 * Verifies that `P` enumerates the sector's points with values `0..=n`.
 */
SpStatus sp_verify_prefix(const SpPoly *p, const SpSector *s, uint64_t n, SpVerifyResult *out);

/**
 * Two distinct cone points with equal value; `budget = 0` selects the
 * default of one million examined points.
 */
SpStatus sp_find_collision(const SpPoly *p, const SpCone *cone, uint64_t budget, SpCollision *out);

/**
 * `∫₀^α dt/(A + 2Bt + Ct²)` for `B² = AC`, as a double.
 */
SpStatus sp_closed_form_density(int64_t a, int64_t b, int64_t c, const SpSector *s, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SECTORPACK_H */
