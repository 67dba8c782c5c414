/*
 * C interface to the symf symmetric-function library.
 *
 * Objects are opaque handles. Every fallible call returns a symf_status; on
 * failure the context keeps a message retrievable with symf_last_error().
 * Strings returned through `char**` are owned by the caller and released with
 * symf_string_free().
 */
#ifndef SYMF_SYMF_H
#define SYMF_SYMF_H

#include <stddef.h>

#if defined(_WIN32)
#  define SYMF_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define SYMF_API __attribute__((visibility("default")))
#else
#  define SYMF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the command-line tool's exit codes. */
typedef enum symf_status {
    SYMF_OK = 0,
    SYMF_ERR_USAGE = 1,
    SYMF_ERR_PARSE = 2,
    SYMF_ERR_DEGREE = 3,
    SYMF_ERR_RESOURCE = 4,
    SYMF_ERR_SELFTEST = 5,
    SYMF_ERR_INTERNAL = 6
} symf_status;

typedef enum symf_basis {
    SYMF_BASIS_P = 0,
    SYMF_BASIS_H = 1,
    SYMF_BASIS_E = 2,
    SYMF_BASIS_M = 3,
    SYMF_BASIS_S = 4
} symf_basis;

typedef enum symf_family {
    SYMF_FAMILY_SL = 0,        /* defining representation of SL(n) */
    SYMF_FAMILY_SP = 1,        /* defining representation of Sp(2n) */
    SYMF_FAMILY_PERM = 2,      /* permutation representation of S(n) */
    SYMF_FAMILY_GL_ADJOINT = 3 /* adjoint representation of GL(n) */
} symf_family;

typedef struct symf_context symf_context;
typedef struct symf_fn symf_fn;

/* Selftest progress callback: one call per check. */
typedef void (*symf_check_callback)(const char* name, int passed, const char* detail, double seconds,
                                    void* user);

/* cache_dir: directory for character-table files; NULL selects $SYMF_CACHE_DIR or the
 * platform cache directory, "" disables the disk cache. */
SYMF_API symf_status symf_context_create(const char* cache_dir, symf_context** out);
SYMF_API void symf_context_destroy(symf_context* ctx);
SYMF_API const char* symf_last_error(const symf_context* ctx);
/* Warnings collected since the last call to symf_clear_warnings. */
SYMF_API size_t symf_warning_count(const symf_context* ctx);
SYMF_API const char* symf_warning(const symf_context* ctx, size_t index);
SYMF_API void symf_clear_warnings(symf_context* ctx);

SYMF_API void symf_string_free(char* s);

/* Symmetric functions */
SYMF_API symf_status symf_fn_parse(symf_context* ctx, const char* expr, symf_fn** out);
SYMF_API symf_status symf_fn_from_json(symf_context* ctx, const char* json, symf_fn** out);
SYMF_API symf_status symf_fn_basis_element(symf_context* ctx, symf_basis basis, const int* parts, size_t len,
                                           symf_fn** out);
SYMF_API void symf_fn_destroy(symf_fn* f);
/* Plain text ("4/3*s[2,1] - s[3]") or JSON, in the requested basis. */
SYMF_API symf_status symf_fn_format(symf_context* ctx, const symf_fn* f, symf_basis basis, int json, char** out);
SYMF_API symf_status symf_fn_equal(symf_context* ctx, const symf_fn* f, const symf_fn* g, int* out);

SYMF_API symf_status symf_fn_add(symf_context* ctx, const symf_fn* f, const symf_fn* g, symf_fn** out);
SYMF_API symf_status symf_fn_mul(symf_context* ctx, const symf_fn* f, const symf_fn* g, symf_fn** out);
SYMF_API symf_status symf_fn_plethysm(symf_context* ctx, const symf_fn* f, const symf_fn* g, symf_fn** out);
SYMF_API symf_status symf_fn_kronecker(symf_context* ctx, const symf_fn* f, const symf_fn* g, symf_fn** out);
/* Rational results are written as exact strings such as "4/3". */
SYMF_API symf_status symf_fn_scalar(symf_context* ctx, const symf_fn* f, const symf_fn* g, char** out);
SYMF_API symf_status symf_fn_dimension(symf_context* ctx, const symf_fn* f, char** out);
/* mode: 0 power-sum expansion, 1 Schur expansion */
SYMF_API symf_status symf_fundamental(symf_context* ctx, const symf_fn* outer, const symf_fn* paired, int r,
                                      int mode, symf_fn** out);

/* Invariants. `stable` only affects SYMF_FAMILY_GL_ADJOINT. `functor` may be NULL for
 * the identity functor. */
SYMF_API symf_status symf_inv_char(symf_context* ctx, symf_family family, int n, int stable, int r,
                                   const symf_fn* functor, symf_fn** out);
SYMF_API symf_status symf_hilbert_dim(symf_context* ctx, symf_family family, int n, int stable, int r,
                                      const symf_fn* functor, char** out);

/* Enumeration */
SYMF_API symf_status symf_card_deals(symf_context* ctx, int m, int n, char** out);
SYMF_API symf_status symf_deals_cycle_index(symf_context* ctx, int m, int n, symf_fn** out);
SYMF_API symf_status symf_regular_graphs(symf_context* ctx, int n, int k, char** out);
SYMF_API symf_status symf_regular_graphs_cycle_index(symf_context* ctx, int n, int k, symf_fn** out);

/* Character table of S_r, as text or as the versioned cache JSON. */
SYMF_API symf_status symf_character_table(symf_context* ctx, int r, int json, char** out);

/* Oracle-equivalence suite. max_degree <= 0 runs the full bounds. *failures receives
 * the number of failing checks; the status is SYMF_ERR_SELFTEST when it is nonzero. */
SYMF_API symf_status symf_selftest(symf_context* ctx, int max_degree, symf_check_callback callback, void* user,
                                   int* failures);

#ifdef __cplusplus
}
#endif

#endif /* SYMF_SYMF_H */
