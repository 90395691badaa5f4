#ifndef EBC_EBC_H
#define EBC_EBC_H

/* C interface to the Erdos-Burgess engine. Every report is a NUL-terminated
 * JSON document owned by the caller and released with ebc_string_free. On
 * failure the out-parameter is left NULL (except where noted) and
 * ebc_last_error() describes the problem for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EBC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define EBC_API __attribute__((visibility("default")))
#else
#define EBC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ebc_status {
  EBC_OK = 0,
  EBC_INPUT_ERROR = 1,
  EBC_BUDGET_EXCEEDED = 2,   /* report is still produced */
  EBC_PROPERTY_FAILURE = 3,  /* report is still produced */
  EBC_RESOURCE_ERROR = 4,    /* an order cap was exceeded */
  EBC_INTERNAL_ERROR = 5
} ebc_status;

typedef struct ebc_ring ebc_ring;
typedef struct ebc_semigroup ebc_semigroup;

typedef struct ebc_options {
  size_t structure_cap;   /* largest ring or semigroup built, default 4096 */
  size_t eb_cap;          /* largest order handed to the exact solver, default 128 */
  uint32_t depth_budget;  /* 0 means the GHW bound */
  unsigned threads;       /* solver workers, default 1 */
  size_t memo_capacity;   /* default 2^22 entries */
  uint64_t seed;          /* sampled axiom checks and random suites */
  int stats;              /* nonzero adds timings and search counters */
} ebc_options;

EBC_API void ebc_options_init(ebc_options* opts);

EBC_API const char* ebc_version(void);
EBC_API const char* ebc_last_error(void);
EBC_API void ebc_string_free(char* s);

/* Rings from DSL text, e.g. "Z/12" or "GF(9) x bool(2)". */
EBC_API ebc_status ebc_ring_parse(const char* expr, const ebc_options* opts, ebc_ring** out);
/* Rings from {"order": n, "add": [...], "mul": [...]}, tables row-major as a
 * flat list or a list of rows. */
EBC_API ebc_status ebc_ring_from_json(const char* json, const ebc_options* opts, ebc_ring** out);
EBC_API size_t ebc_ring_order(const ebc_ring* r);
/* Canonical text: the DSL rendering, or a table label. Owned by r. */
EBC_API const char* ebc_ring_label(const ebc_ring* r);
EBC_API void ebc_ring_free(ebc_ring* r);

/* Semigroups from {"order": n, "mul": [...]}; "add" is ignored if present. */
EBC_API ebc_status ebc_semigroup_from_json(const char* json, const ebc_options* opts,
                                           ebc_semigroup** out);
EBC_API ebc_status ebc_semigroup_of_ring(const ebc_ring* r, ebc_semigroup** out);
EBC_API size_t ebc_semigroup_order(const ebc_semigroup* s);
EBC_API void ebc_semigroup_free(ebc_semigroup* s);

EBC_API ebc_status ebc_analyze(const ebc_ring* r, const ebc_options* opts, char** report);
EBC_API ebc_status ebc_eb_ring(const ebc_ring* r, const ebc_options* opts, char** report);
EBC_API ebc_status ebc_eb_semigroup(const ebc_semigroup* s, const ebc_options* opts,
                                    char** report);
/* group_spec: invariant factors "d1,d2,..." with d1 | d2 | ... */
EBC_API ebc_status ebc_davenport(const char* group_spec, const ebc_options* opts, char** report);
EBC_API ebc_status ebc_certify(const ebc_ring* r, const ebc_options* opts, char** report);
/* corpus_text NULL selects the built-in corpus; source names it in errors. */
EBC_API ebc_status ebc_verify_corpus(const char* corpus_text, const char* source,
                                     const ebc_options* opts, char** report);

#ifdef __cplusplus
}
#endif

#endif
