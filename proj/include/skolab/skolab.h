/* C interface to the skolab core. Strings returned through char** are owned by
 * the caller and released with skolab_string_free. On failure the functions
 * return a nonzero status and skolab_last_error() describes it (per thread). */
#ifndef SKOLAB_H
#define SKOLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SKOLAB_API __declspec(dllexport)
#else
#  define SKOLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skolab_status {
    SKOLAB_OK = 0,
    SKOLAB_INVALID_ARGUMENT = 1, /* bad parameters, usage errors */
    SKOLAB_NULL_POINTER = 2,
    SKOLAB_INTERNAL = 3          /* unexpected failure inside the core */
} skolab_status;

typedef struct skolab_context skolab_context;

SKOLAB_API const char* skolab_version(void);
SKOLAB_API const char* skolab_last_error(void);
SKOLAB_API void skolab_string_free(char* s);

/* O(n;t) with 2n+1 variables over GF(p) and the divergence parameter lambda. */
SKOLAB_API skolab_status skolab_context_create(uint32_t p, uint32_t n, const uint32_t* t, size_t t_len,
                                               uint32_t lambda, skolab_context** out);
SKOLAB_API void skolab_context_destroy(skolab_context* ctx);

/* Number of basis monomials of O. */
SKOLAB_API skolab_status skolab_basis_size(const skolab_context* ctx, uint64_t* out);
/* Brute-force dimensions of g'', g' and g (computed on first use, then cached). */
SKOLAB_API skolab_status skolab_derived_dims(skolab_context* ctx, uint64_t* g2, uint64_t* g1, uint64_t* g);
/* S1..S5 and the unit with labels, rank and nullity, as JSON. */
SKOLAB_API skolab_status skolab_spanning_json(const skolab_context* ctx, char** out);

/* Closed-form dimension as a decimal string. family is one of W, S, H, K, HO,
 * KO, SHO, SKO; m counts even variables and t has m entries. lambda < 0 means
 * absent (required for SKO only). */
SKOLAB_API skolab_status skolab_dim_family(const char* family, uint32_t p, uint32_t m, uint32_t n,
                                           const uint32_t* t, size_t t_len, int32_t lambda, char** out);
/* One CSV row per family and parameter choice. */
SKOLAB_API skolab_status skolab_compare_csv(uint32_t p, char** out);

typedef struct skolab_run_options {
    uint32_t p;
    uint32_t n;
    const char* t;       /* comma list, e.g. "1,1,1" */
    const char* lambda;  /* integer or "all" */
    uint64_t seed;
    const char* suites;  /* comma list or "all"; NULL means all */
    const char* format;  /* json, csv or text; NULL means json */
    int parallel;
    int timings;
    uint64_t derivation_samples; /* 0: exhaustive derivation-law checks */
} skolab_run_options;

/* Fills opts with the defaults: p=5, n=3, t=1,1,1, lambda=2, seed=1, all suites, json. */
SKOLAB_API void skolab_run_options_init(skolab_run_options* opts);
/* Runs the verification suites. *all_pass is 1 iff every claim held. */
SKOLAB_API skolab_status skolab_run_suites(const skolab_run_options* opts, char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
