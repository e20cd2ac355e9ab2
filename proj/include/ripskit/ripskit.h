#ifndef RIPSKIT_RIPSKIT_H
#define RIPSKIT_RIPSKIT_H

/* C interface to ripskit. All text crosses the boundary in the documented
 * line formats. Strings returned through char** are owned by the caller and
 * released with rk_string_free; handles with their matching _free. On any
 * status other than RK_OK the out-parameters are left untouched and
 * rk_last_error() describes the failure (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(RIPSKIT_BUILDING_LIBRARY)
#define RK_API __attribute__((visibility("default")))
#else
#define RK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERR_PARSE = 1,
  RK_ERR_INVALID = 2,
  RK_ERR_BUDGET = 3,
  RK_ERR_NOT_CERTIFIED = 4,
  RK_ERR_IO = 5,
  RK_ERR_INTERNAL = 6
} rk_status;

typedef enum rk_verdict {
  RK_HOLDS = 0,
  RK_FAILS = 1,
  RK_INCONCLUSIVE = 2
} rk_verdict;

typedef struct rk_presentation rk_presentation;
typedef struct rk_word rk_word;
typedef struct rk_fiber_input rk_fiber_input;

RK_API const char* rk_version(void);
RK_API const char* rk_last_error(void);
RK_API const char* rk_status_name(rk_status s);
RK_API void rk_string_free(char* s);

/* ------------------------------------------------------------ handles */

RK_API rk_status rk_presentation_parse(const char* text, rk_presentation** out);
// RK_ERR_BUDGET when the text would exceed 5e7 syllables.
RK_API rk_status rk_presentation_serialize(const rk_presentation* p, char** out);
RK_API size_t rk_presentation_generator_count(const rk_presentation* p);
RK_API size_t rk_presentation_relator_count(const rk_presentation* p);
RK_API void rk_presentation_free(rk_presentation* p);

/* Word file text: one word, comment lines allowed. */
RK_API rk_status rk_word_parse(const char* text, rk_word** out);
RK_API rk_status rk_word_serialize(const rk_word* w, char** out);
RK_API void rk_word_free(rk_word* w);

RK_API rk_status rk_fiber_input_parse(const char* text, rk_fiber_input** out);
RK_API rk_status rk_fiber_input_serialize(const rk_fiber_input* in, char** out);
RK_API void rk_fiber_input_free(rk_fiber_input* in);

/* ----------------------------------------------------------- builders */

/* Big integers travel as decimal strings; NULL means "use the default". */
typedef struct rk_rips_options {
  uint64_t p;
  const char* m_override;
  const char* lambda_override;
} rk_rips_options;

RK_API void rk_rips_options_init(rk_rips_options* opt);

/* constants (optional) receives "p:", "m:", "lambda:" lines. */
RK_API rk_status rk_rips(const rk_presentation* w, const rk_rips_options* opt,
                         rk_presentation** out, char** constants);
RK_API rk_status rk_theta(uint64_t n, rk_presentation** out);
/* <x, y | Sigma_w>. */
RK_API rk_status rk_miller(const rk_presentation* seed, const rk_word* w, rk_presentation** out);
/* sigma: one word per line over q's generators. */
RK_API rk_status rk_w_sigma_k(const rk_presentation* q, const char* sigma, size_t k,
                              rk_presentation** out);
RK_API rk_status rk_tilde(const rk_word* w, size_t r, rk_word** out);
RK_API rk_status rk_fiber_gadget(const rk_fiber_input* in, const rk_word* w, rk_presentation** out);

typedef struct rk_gamma_options {
  size_t k;
  rk_rips_options rips;
  uint64_t max_cosets;
  const rk_presentation* q; /* NULL: free group on a, b */
  const char* r_prime;      /* one word per line, may be NULL */
  const rk_word* a_bar;     /* NULL: the word "a" */
  const rk_word* b_bar;     /* NULL: the word "b" */
} rk_gamma_options;

RK_API void rk_gamma_options_init(rk_gamma_options* opt);

RK_API rk_status rk_pipeline_gamma(const rk_presentation* seed, const rk_word* w,
                                   const rk_gamma_options* opt, rk_presentation** gamma,
                                   char** report);

/* ---------------------------------------------------------- verifiers */

/* HOLDS / FAILS. */
RK_API rk_status rk_verify_metric(const rk_presentation* p, const char* lambda, uint64_t piece_budget,
                                  rk_verdict* verdict, char** report);
/* HOLDS when the abelianization is trivial, FAILS otherwise. */
RK_API rk_status rk_abelianize(const rk_presentation* p, rk_verdict* verdict, char** report);
/* HOLDS: trivial, FAILS: nontrivial. Uncertified input -> RK_ERR_NOT_CERTIFIED. */
RK_API rk_status rk_dehn(const rk_presentation* p, const rk_word* w, uint64_t piece_budget,
                         rk_verdict* verdict, char** report);
/* subgroup: one word per line, may be NULL. HOLDS: finite, INCONCLUSIVE: exhausted. */
RK_API rk_status rk_coset(const rk_presentation* p, const char* subgroup, uint64_t max_cosets,
                          rk_verdict* verdict, char** report);
/* HOLDS: witness found, FAILS: none up to max_degree. */
RK_API rk_status rk_quotient_search(const rk_presentation* p, size_t max_degree, rk_verdict* verdict,
                                    char** report);
/* HOLDS: yes, FAILS: no, INCONCLUSIVE. */
RK_API rk_status rk_closure_member(const rk_presentation* p, const rk_word* w, uint64_t max_cosets,
                                   rk_verdict* verdict, char** report);

#ifdef __cplusplus
}
#endif

#endif
