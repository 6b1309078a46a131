#ifndef CRAIG_LATTICE_H
#define CRAIG_LATTICE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum CraigStatus {
  CRAIG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CRAIG_STATUS_NULL = 1,
  /**
   * Parameters rejected by the library.
   */
  CRAIG_STATUS_INVALID = 2,
  /**
   * Input exceeds a size limit.
   */
  CRAIG_STATUS_CAPACITY = 3,
  /**
   * Unexpected failure, including a caught panic.
   */
  CRAIG_STATUS_INTERNAL = 4,
} CraigStatus;

/**
 * An exact center density.
 */
typedef struct CraigDensity CraigDensity;

/**
 * A constructed `A_n^(m,l)` with its basis.
 */
typedef struct CraigLattice CraigLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *craig_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void craig_string_free(char *s);

/**
 * Builds `A_n^(m,l)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum CraigStatus craig_lattice_new(uintptr_t n, uintptr_t m, uint64_t l, struct CraigLattice **out);

/**
 * Releases a lattice handle. Null is ignored.
 *
 * # Safety
 * `h` must come from [`craig_lattice_new`] and not have been freed.
 */
void craig_lattice_free(struct CraigLattice *h);

/**
 * Rank of the lattice.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_lattice_rank(const struct CraigLattice *h, uintptr_t *out);

/**
 * Gram determinant `l^(2(m-1)) (n+1)` as a decimal string.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_lattice_gram_det(const struct CraigLattice *h, char **out);

/**
 * Basis in the text format: `"N r"` then `r` rows.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_lattice_basis_text(const struct CraigLattice *h, char **out);

/**
 * Exact minimum norm by enumeration.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_lattice_min_norm(const struct CraigLattice *h, uint64_t *out);

/**
 * Density of the handle's lattice lifted through a `k`-dimensional code
 * (`k = 0` for the bare lattice).
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_lattice_density(const struct CraigLattice *h,
                                       uintptr_t k,
                                       struct CraigDensity **out);

/**
 * Density bound of `A_n^(m,l)` with a `k`-dimensional code, without
 * building a basis.
 *
 * # Safety
 * `out` must be writable.
 */
enum CraigStatus craig_density_new(uintptr_t n,
                                   uintptr_t m,
                                   uint64_t l,
                                   uintptr_t k,
                                   struct CraigDensity **out);

/**
 * Mordell-Weil reference density in dimension `2p-2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CraigStatus craig_density_mordell_weil(uint64_t p, struct CraigDensity **out);

/**
 * Releases a density handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void craig_density_free(struct CraigDensity *h);

/**
 * `log2` of the density, correctly rounded to `digits` decimals.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_density_log2(const struct CraigDensity *h, uint32_t digits, char **out);

/**
 * Floating-point estimate of `log2` of the density.
 *
 * # Safety
 * `h` must be a live handle; `out` writable.
 */
enum CraigStatus craig_density_log2_approx(const struct CraigDensity *h, double *out);

/**
 * Largest `k` for which the Gilbert-Varshamov inequality guarantees an
 * `[n, k, d]` binary code.
 *
 * # Safety
 * `out` must be writable.
 */
enum CraigStatus craig_gv_max_k(uintptr_t n, uintptr_t d, uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRAIG_LATTICE_H */
