#ifndef QUINTIC_GW_H
#define QUINTIC_GW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QgwStatus {
  QGW_STATUS_OK = 0,
  QGW_STATUS_NULL_POINTER = 1,
  QGW_STATUS_INVALID_UTF8 = 2,
  QGW_STATUS_ARGUMENT = 3,
  QGW_STATUS_PRECONDITION = 4,
  QGW_STATUS_FORMULA_HYPOTHESIS = 5,
  QGW_STATUS_UNSUPPORTED_SHAPE = 6,
  QGW_STATUS_RESOURCE_LIMIT = 7,
  QGW_STATUS_MISSING_INPUT = 8,
  QGW_STATUS_DEGENERATE = 9,
  QGW_STATUS_PARSE = 10,
  QGW_STATUS_INTEGRITY = 11,
  QGW_STATUS_IDENTITY = 12,
  QGW_STATUS_IO = 13,
  QGW_STATUS_OUT_OF_RANGE = 14,
  QGW_STATUS_PANIC = 15,
} QgwStatus;

/**
 * Parsed A/NPT inputs for one `(g, d)`.
 */
typedef struct QgwInputs QgwInputs;

/**
 * A sparse `C_rho` map, iterated in canonical order.
 */
typedef struct QgwSolution QgwSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy of the last error message on this thread, or NULL. Free with
 * `qgw_string_free`.
 */
char *qgw_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void qgw_string_free(char *s);

/**
 * Degree-zero invariant `N_{g,0}` for Euler characteristic `chi`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QgwStatus qgw_n_g0(uint32_t genus, int64_t chi, char **out);

/**
 * Connected fiber invariant. `insertions_json` is `[[n,l],...]`.
 *
 * # Safety
 * `insertions_json` must be a NUL-terminated string, `out` a valid pointer.
 */
enum QgwStatus qgw_fiber_connected(uint64_t mu,
                                   uint32_t rel_power,
                                   const char *insertions_json,
                                   char **out);

/**
 * Closed-form master coefficient for genus 2 or 3.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QgwStatus qgw_c_master(uint32_t genus, uint32_t degree, char **out);

/**
 * Closed-form `B(zeta)`.
 *
 * # Safety
 * `zeta_json` must be a NUL-terminated string, `out` a valid pointer.
 */
enum QgwStatus qgw_b_value(uint32_t genus, uint32_t degree, const char *zeta_json, char **out);

/**
 * Solves for the `C_rho` coefficients of `zeta`.
 *
 * # Safety
 * `zeta_json` must be a NUL-terminated string, `out` a valid pointer.
 */
enum QgwStatus qgw_solve_crho(uint32_t genus,
                              uint32_t degree,
                              const char *zeta_json,
                              struct QgwSolution **out);

/**
 * Number of nonzero coefficients, or 0 for NULL.
 *
 * # Safety
 * `sol` must be NULL or a live handle.
 */
size_t qgw_solution_len(const struct QgwSolution *sol);

/**
 * Entry `index` as a JSON pair set and a rational string.
 *
 * # Safety
 * `sol` must be a live handle; `rho_out` and `coeff_out` valid pointers.
 */
enum QgwStatus qgw_solution_entry(const struct QgwSolution *sol,
                                  size_t index,
                                  char **rho_out,
                                  char **coeff_out);

/**
 * # Safety
 * `sol` must be NULL or a handle not yet freed.
 */
void qgw_solution_free(struct QgwSolution *sol);

/**
 * Parses an A/NPT input document.
 *
 * # Safety
 * `json` must be a NUL-terminated string, `out` a valid pointer.
 */
enum QgwStatus qgw_inputs_from_json(const char *json, struct QgwInputs **out);

/**
 * Genus and degree the inputs were written for.
 *
 * # Safety
 * `inputs` must be a live handle; `genus` and `degree` valid pointers.
 */
enum QgwStatus qgw_inputs_key(const struct QgwInputs *inputs, uint32_t *genus, uint32_t *degree);

/**
 * Solves the master equation for `N_{g,d}`.
 *
 * # Safety
 * `inputs` must be a live handle, `out` a valid pointer.
 */
enum QgwStatus qgw_solve_ngd(const struct QgwInputs *inputs, char **out);

/**
 * # Safety
 * `inputs` must be NULL or a handle not yet freed.
 */
void qgw_inputs_free(struct QgwInputs *inputs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUINTIC_GW_H */
