/* C interface to the siegel library: opaque handles, status codes, and
 * JSON report strings. Every function returns a status; on failure the
 * thread-local message from sgl_last_error() says what went wrong.
 */
#ifndef SIEGEL_CAPI_H
#define SIEGEL_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgl_status {
    SGL_OK = 0,
    SGL_ERR_INVALID = 1, /* unparseable input, parity violation, bad range */
    SGL_ERR_MATH = 2,    /* a mathematical assertion failed */
    SGL_ERR_BUDGET = 3,  /* a size budget was exceeded */
    SGL_ERR_INTERNAL = 4
} sgl_status;

/* thread-local message describing the most recent failure */
const char* sgl_last_error(void);

/* dominant-or-not torus character (a_g, ..., a_1; c); creation enforces the
 * parity constraint c = a_g + ... + a_1 (mod 2) */
typedef struct sgl_weight sgl_weight;
sgl_status sgl_weight_create(int g, const long long* coords, long long central,
                             sgl_weight** out);
void sgl_weight_free(sgl_weight* w);

/* scalar operations */
sgl_status sgl_motivic_weight(const sgl_weight* w, long long* out);
sgl_status sgl_is_p_small(const sgl_weight* w, long long p, int* out);
sgl_status sgl_minuscule_pairing_shifted(const sgl_weight* w, long long* out);

/* report operations; *out receives a heap JSON string with sorted keys,
 * to be released with sgl_string_free */
sgl_status sgl_roots_json(int g, char** out);
sgl_status sgl_weyl_json(int g, char** out);
sgl_status sgl_kostant_json(int g, int r, char** out); /* r = 0 for the Siegel parabolic */
sgl_status sgl_hodge_json(const sgl_weight* w, char** out);
sgl_status sgl_bgg_json(const sgl_weight* w, long long p, char** out);
sgl_status sgl_kostant_modp_json(const sgl_weight* w, int r, long long p, char** out);
sgl_status sgl_claim84_json(const sgl_weight* w, int r, char** out);
sgl_status sgl_claim87_json(const sgl_weight* w, int depth, char** out);
sgl_status sgl_strata_json(int g, char** out);
sgl_status sgl_traceless_json(int g, int s, size_t budget, char** out);
sgl_status sgl_idempotent_json(int g, int s, long long p, size_t budget, char** out);
sgl_status sgl_lattice_json(const sgl_weight* w, long long p, size_t budget, char** out);

/* rationals are passed as strings like "13/2"; vectors as comma-separated
 * strings in the display order (index g first) */
sgl_status sgl_spin_slopes_json(int g, const char* t_csv, const char* z, char** out);
sgl_status sgl_solve_slopes_json(int g, const char* slopes_csv, int displayed_mode, char** out);
sgl_status sgl_ao_json(const sgl_weight* w, const char* valuations_csv, char** out);
sgl_status sgl_satake_json(int g, const char* exponents_csv, int r, char** out);

/* acceptance runner; genus loops capped at gmax when gmax > 0. Returns
 * SGL_ERR_MATH when a criterion fails (the JSON still carries the details). */
sgl_status sgl_verify_all_json(int gmax, char** out);

void sgl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SIEGEL_CAPI_H */
