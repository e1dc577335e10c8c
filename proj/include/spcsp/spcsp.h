#ifndef SPCSP_H
#define SPCSP_H

#include <stdint.h>

#if defined(SPCSP_BUILDING)
#define SPCSP_API __attribute__((visibility("default")))
#else
#define SPCSP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values match the library's error kinds. */
typedef enum spcsp_status {
  SPCSP_OK = 0,
  SPCSP_ERR_INVALID_INPUT = 1,
  SPCSP_ERR_OUT_OF_RANGE_WEIGHT,
  SPCSP_ERR_EMPTY_STRICT_RELATION,
  SPCSP_ERR_NO_PROMISE_HOMOMORPHISM,
  SPCSP_ERR_INVALID_INSTANCE,
  SPCSP_ERR_INVALID_ARITY,
  SPCSP_ERR_ARITY_MISMATCH,
  SPCSP_ERR_ARITY_TOO_LARGE,
  SPCSP_ERR_NOT_A_RELAXATION,
  SPCSP_ERR_ARITY_UNDERFLOW,
  SPCSP_ERR_DEGENERATE_CHAIN,
  SPCSP_ERR_SHAPE_MISMATCH,
  SPCSP_ERR_NO_SMALL_FIXING_SET,
  SPCSP_ERR_SANITY_CHECK_FAILED,
  SPCSP_ERR_NOT_TRACTABLE,
  SPCSP_ERR_NO_INSTANCE,
  SPCSP_ERR_TOO_LARGE,
  SPCSP_ERR_NULL_ARGUMENT = 100,
  SPCSP_ERR_INTERNAL = 101
} spcsp_status;

typedef struct spcsp_template spcsp_template;
typedef struct spcsp_instance spcsp_instance;
typedef struct spcsp_classification spcsp_classification;
typedef struct spcsp_function spcsp_function;

SPCSP_API const char* spcsp_version(void);
SPCSP_API const char* spcsp_status_name(spcsp_status status);
/* Message of the last failing call on this thread; never NULL. */
SPCSP_API const char* spcsp_last_error(void);
/* Frees any string returned through a char** out parameter. */
SPCSP_API void spcsp_string_free(char* s);

SPCSP_API spcsp_status spcsp_template_parse(const char* json, spcsp_template** out);
SPCSP_API spcsp_status spcsp_template_to_json(const spcsp_template* t, char** out);
SPCSP_API void spcsp_template_free(spcsp_template* t);

SPCSP_API spcsp_status spcsp_instance_parse(const char* json, spcsp_instance** out);
SPCSP_API void spcsp_instance_free(spcsp_instance* inst);

SPCSP_API spcsp_status spcsp_classify(const spcsp_template* t, spcsp_classification** out);
SPCSP_API int spcsp_classification_tractable(const spcsp_classification* c);
SPCSP_API spcsp_status spcsp_classification_to_json(const spcsp_classification* c, int with_certificate,
                                                   char** out);
SPCSP_API void spcsp_classification_free(spcsp_classification* c);

/* Writes {"assignment":[...]}; SPCSP_ERR_NO_INSTANCE when no assignment exists. */
SPCSP_API spcsp_status spcsp_solve(const spcsp_template* t, const spcsp_instance* inst, char** out);
/* side: 0 checks the strict side A, 1 the relaxed side B. */
SPCSP_API spcsp_status spcsp_check(const spcsp_template* t, const spcsp_instance* inst, const char* assignment_json,
                                   int side, int* ok);

SPCSP_API spcsp_status spcsp_function_from_hex(const char* hex, int arity, spcsp_function** out);
SPCSP_API void spcsp_function_free(spcsp_function* f);
/* requests: comma-separated analyses; t may be NULL unless a request needs it. */
SPCSP_API spcsp_status spcsp_analyze(const spcsp_function* f, const char* requests, const spcsp_template* t,
                                     char** out);

SPCSP_API spcsp_status spcsp_enumerate(const spcsp_template* t, int arity, int jobs, int allow_arity5,
                                       int count_only, char** out);

/* Applies a chain to pair `pair` (negative: the last pair). warnings may be NULL. */
SPCSP_API spcsp_status spcsp_relax(const spcsp_template* t, const char* chain, int pair, char** out,
                                   char** warnings);

SPCSP_API spcsp_status spcsp_consistency_check(const spcsp_template* t, int max_arity, char** out);

/* JSON array of suite names. */
SPCSP_API spcsp_status spcsp_oracle_suites(char** out);
/* Summary JSON; *failures receives the failure count. */
SPCSP_API spcsp_status spcsp_oracle_run(const char* suite, uint64_t seed, int jobs, char** out,
                                        uint64_t* failures);

#ifdef __cplusplus
}
#endif

#endif
