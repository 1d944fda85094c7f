#ifndef COFROB_H
#define COFROB_H

/* Generated by cbindgen from cofrob-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum CofrobStatus {
  // Success; output parameters are valid.
  COFROB_STATUS_OK = 0,
  // Input was well formed but the mathematics rejected it (failed axiom,
  // singular operator, missing integral, non-simple comodule).
  COFROB_STATUS_MATH_FAILURE = 1,
  // Malformed input: unreadable JSON, bad indices, invalid parameters.
  COFROB_STATUS_INVALID_INPUT = 2,
  // A required pointer argument was null.
  COFROB_STATUS_NULL_POINTER = 3,
} CofrobStatus;

// Opaque handle to a right comodule.
typedef struct CofrobComodule CofrobComodule;

// Opaque handle to a Hecke symmetry.
typedef struct CofrobHecke CofrobHecke;

// Opaque handle to a finite-dimensional Hopf algebra.
typedef struct CofrobHopf CofrobHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *cofrob_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed before.
void cofrob_string_free(char *s);

// Parses an R-matrix JSON document (same schema as the CLI files).
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be writable.
enum CofrobStatus cofrob_hecke_from_json(const char *json, struct CofrobHecke **out);

// Builds the standard two-dimensional symmetry at the rational parameter
// `q`, given as `"num/den"` (or a bare integer string).
//
// # Safety
// `q` must be a valid NUL-terminated string; `out` must be writable.
enum CofrobStatus cofrob_hecke_manin_standard(const char *q, struct CofrobHecke **out);

// # Safety
// `h` must come from a cofrob constructor and not have been freed before.
void cofrob_hecke_free(struct CofrobHecke *h);

// Runs the three Hecke-symmetry checks, writing one flag per axiom.
//
// # Safety
// All pointers must be valid; flag outputs must be writable.
enum CofrobStatus cofrob_hecke_verify(const struct CofrobHecke *h,
                                      bool *ybe,
                                      bool *hecke,
                                      bool *closed);

// The q-rank as a `"num/den"` string; fails when the half-dual is singular.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum CofrobStatus cofrob_hecke_q_rank(const struct CofrobHecke *h, char **out);

// Graded dimension of the quantum symmetric (`antisymmetric == false`) or
// antisymmetric algebra in degree `n`.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum CofrobStatus cofrob_hecke_graded_dim(const struct CofrobHecke *h,
                                          bool antisymmetric,
                                          uint32_t n,
                                          uint64_t *out);

// Birank-(1,1) verdict from the antisymmetric series up to `max_degree`.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum CofrobStatus cofrob_hecke_birank11(const struct CofrobHecke *h,
                                        uint32_t max_degree,
                                        bool *out);

// Dimension of the comodule endomorphism algebra of the n-th tensor power.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum CofrobStatus cofrob_hecke_commutant_dim(const struct CofrobHecke *h,
                                             uint32_t n,
                                             uint64_t *out);

// Dimension (1 or 2) of the simple comodule labelled `(m, n)`.
uint64_t cofrob_label_dim(int64_t m, int64_t n);

// Whether the label `(m, n)` names a splitting (typical) comodule.
bool cofrob_label_is_splitting(int64_t m, int64_t n);

// Tensor decomposition of `(m,n) (x) (p,q)` as a JSON string, in the same
// schema as `cofrob fusion mul --json`.
//
// # Safety
// `out` must be writable.
enum CofrobStatus cofrob_fusion_mul_json(int64_t m, int64_t n, int64_t p, int64_t q, char **out);

// Parses a Hopf-algebra JSON document (CLI schema). The handle is created
// even when the axioms fail; run [`cofrob_hopf_validate`] to check them.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be writable.
enum CofrobStatus cofrob_hopf_from_json(const char *json, struct CofrobHopf **out);

// # Safety
// `h` must come from a cofrob constructor and not have been freed before.
void cofrob_hopf_free(struct CofrobHopf *h);

// Checks the Hopf axioms. Returns `MathFailure` on the first failing axiom
// and writes its name to `failed_axiom` (caller frees); writes null on pass.
//
// # Safety
// `h` must be a live handle; `failed_axiom` must be writable.
enum CofrobStatus cofrob_hopf_validate(const struct CofrobHopf *h, char **failed_axiom);

// Solves for the integral on the given side (`0` left, `1` right) and writes
// the covector as a JSON array of `"num/den"` strings.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum CofrobStatus cofrob_hopf_integral(const struct CofrobHopf *h, int32_t side, char **out);

// Parses a comodule JSON document (CLI schema).
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be writable.
enum CofrobStatus cofrob_comodule_from_json(const char *json, struct CofrobComodule **out);

// # Safety
// `m` must come from a cofrob constructor and not have been freed before.
void cofrob_comodule_free(struct CofrobComodule *m);

// Runs the splitting test on a simple comodule.
//
// # Safety
// `h` and `m` must be live handles; `out` must be writable.
enum CofrobStatus cofrob_splitting_test(const struct CofrobHopf *h,
                                        const struct CofrobComodule *m,
                                        bool *out);

// Runs the independent projectivity oracle on a simple comodule.
//
// # Safety
// `h` and `m` must be live handles; `out` must be writable.
enum CofrobStatus cofrob_projectivity_oracle(const struct CofrobHopf *h,
                                             const struct CofrobComodule *m,
                                             bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* COFROB_H */
