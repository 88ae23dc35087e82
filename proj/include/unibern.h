/* C API for the universal Bernoulli number library.
 *
 * All entry points return a status code:
 *   UB_OK      0  success, every check passed or was vacuous
 *   UB_FAIL    1  a congruence failed or a counterexample was found
 *   UB_EUSAGE  2  invalid parameters
 *   UB_ESTORE  3  cache corruption or storage failure
 *
 * Report text is returned through `out` (caller frees with ub_string_free);
 * on UB_EUSAGE/UB_ESTORE consult ub_context_last_error for the message.
 */
#ifndef UNIBERN_H
#define UNIBERN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    UB_OK = 0,
    UB_FAIL = 1,
    UB_EUSAGE = 2,
    UB_ESTORE = 3
};

typedef struct ub_context ub_context;

/* Cache dir defaults to $UNIBERN_CACHE_DIR (empty = caching disabled). */
ub_context* ub_context_new(void);
void ub_context_free(ub_context* ctx);

int ub_context_set_weight_cap(ub_context* ctx, unsigned long cap);
int ub_context_set_cache_dir(ub_context* ctx, const char* dir);
int ub_context_set_jobs(ub_context* ctx, unsigned jobs);
/* records != 0: one JSON object per line; 0: human-readable text lines. */
int ub_context_set_records(ub_context* ctx, int records);

const char* ub_context_last_error(const ub_context* ctx);
void ub_string_free(char* s);

/* B_0..B_max_n by "reversion", "schur", or "both" (asserting agreement). */
int ub_compute(ub_context* ctx, unsigned max_n, const char* method, char** out);

/* Parameter sweeps; inclusive ranges. */
int ub_verify_kummer(ub_context* ctx, long p, long a_lo, long a_hi, long n_lo, long n_hi,
                     char** out);
int ub_verify_adelberg(ub_context* ctx, long p, long a_lo, long a_hi, long n_lo, long n_hi,
                       char** out);
int ub_verify_clarke(ub_context* ctx, long n_lo, long n_hi, char** out);
int ub_verify_lemma331(ub_context* ctx, long p, long max_weight, char** out);
int ub_verify_lemma321(ub_context* ctx, long p, long a_max, long q_max, long n_max, char** out);
int ub_verify_binomval(ub_context* ctx, long p, long a_lo, long a_hi, char** out);

int ub_conjecture(ub_context* ctx, const long* primes, size_t n_primes, long a_max, long n_max,
                  char** out);

/* tau_U for a partition in "j1:m1,j2:m2,..." form; p > 0 adds ord_p. */
int ub_tau(ub_context* ctx, const char* partition, long p, char** out);

/* Sharpness witness partition for p >= 7. */
int ub_witness(ub_context* ctx, long p, char** out);

/* Parse + reserialize the cache file; UB_ESTORE when not byte-identical. */
int ub_cache_roundtrip(ub_context* ctx, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* UNIBERN_H */
