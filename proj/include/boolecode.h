#ifndef BOOLECODE_H
#define BOOLECODE_H

/* C interface to the boolecode library.
 *
 * Every call returns a bc_status. On failure the message is available from
 * bc_last_error() on the same thread until the next call. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with bc_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BOOLECODE_BUILDING)
#define BC_API __attribute__((visibility("default")))
#else
#define BC_API
#endif

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_INVALID_ARGUMENT = 1,
  BC_ERR_PARSE = 2,
  BC_ERR_OUT_OF_RANGE = 3,
  BC_ERR_INTERNAL = 4,
  BC_ERR_NULL_POINTER = 5
} bc_status;

typedef struct bc_function bc_function;
typedef struct bc_scheme bc_scheme;

BC_API const char* bc_version(void);
BC_API const char* bc_last_error(void);
BC_API const char* bc_status_name(bc_status status);
BC_API void bc_string_free(char* s);

/* Target functions. */
BC_API bc_status bc_function_from_hex(unsigned m, const char* hex, bc_function** out);
/* `anf_json` is an array of 1-based index arrays, e.g. "[[1,2,3]]". */
BC_API bc_status bc_function_from_anf_json(unsigned m, const char* anf_json, bc_function** out);
/* {"vars": 3, "terms": [{"coeff": "1", "exps": [5,3,0]}, ...]} or {"vars": n, "outputs": [...]}. */
BC_API bc_status bc_function_from_poly_json(const char* poly_json, bc_function** out);
/* param < 0 selects the preset's default parameter. */
BC_API bc_status bc_function_preset(const char* name, long param, bc_function** out);
BC_API void bc_function_free(bc_function* f);
BC_API bc_status bc_function_analyze_json(const bc_function* f, char** json_out);

/* Scheme instances. d = 0 and q = 0 select the defaults (D = 1, q = 2). */
BC_API bc_status bc_scheme_create(const bc_function* f, const char* scheme, size_t n, size_t k, size_t d,
                                  unsigned q, bc_scheme** out);
BC_API void bc_scheme_free(bc_scheme* s);
BC_API bc_status bc_scheme_threshold(const bc_scheme* s, int64_t* beta, int* feasible);
BC_API bc_status bc_outer_bound(size_t n, size_t k, int64_t* out);

/* One seeded trial with b corrupted workers; json_out may be NULL. */
BC_API bc_status bc_run_trial(const bc_scheme* s, size_t b, const char* strategy, uint64_t seed, int* success,
                              char** json_out);
/* b = 0..b_max; b_max = SIZE_MAX sweeps 0..beta+1. format is "json" or "csv". */
BC_API bc_status bc_sweep(const bc_scheme* s, size_t trials, uint64_t seed, size_t b_max, const char* format,
                          char** out, int* sound);

BC_API bc_status bc_compare(const bc_function* f, size_t n, size_t k, char** json_out);
BC_API bc_status bc_sbox_casestudy(size_t n, size_t k, char** json_out);

/* Runs a full JSON request (see the README for the schema). `violation` is
 * set when run/sweep saw a failure at b <= beta. */
BC_API bc_status bc_execute(const char* request_json, char** out, int* violation);

#ifdef __cplusplus
}
#endif

#endif /* BOOLECODE_H */
