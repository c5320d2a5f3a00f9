/* Copyright 2026 The parrysa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libparrysa.
 *
 * Every fallible call returns a psa_status. On failure the message is
 * available from psa_last_error() on the calling thread until the next
 * call that fails. Output arrays and strings are owned by the caller and
 * released with the matching *_free function. Exact integers cross the
 * boundary as decimal strings. Attractor positions are 1-based.
 */

#ifndef PARRYSA_PARRYSA_H_
#define PARRYSA_PARRYSA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PARRYSA_BUILDING_LIBRARY)
#define PSA_API __attribute__((visibility("default")))
#else
#define PSA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psa_status {
  PSA_OK = 0,
  PSA_ERR_INVALID_ARGUMENT = 1, /* malformed input or null pointer */
  PSA_ERR_DOMAIN = 2,
  PSA_ERR_PRECONDITION = 3,
  PSA_ERR_CAP_REACHED = 4,
  PSA_ERR_INTERNAL = 5,
  PSA_ERR_OUT_OF_MEMORY = 6
} psa_status;

typedef struct psa_param psa_param;

typedef struct psa_u32_array {
  uint32_t* data;
  size_t len;
} psa_u32_array;

typedef struct psa_u64_array {
  uint64_t* data;
  size_t len;
} psa_u64_array;

typedef struct psa_sweep_spec {
  size_t k_min;
  size_t k_max;
  uint32_t digit_max;
  int only_greedy;
  int only_minimal_family;
  uint64_t m_max;
  size_t jobs;
  size_t exact_cap; /* 0 selects the default */
} psa_sweep_spec;

typedef enum psa_format { PSA_FORMAT_CSV = 0, PSA_FORMAT_JSON = 1 } psa_format;

PSA_API const char* psa_version(void);
PSA_API const char* psa_last_error(void);
PSA_API const char* psa_status_name(psa_status status);

PSA_API void psa_string_free(char* s);
PSA_API void psa_u32_array_free(psa_u32_array* a);
PSA_API void psa_u64_array_free(psa_u64_array* a);

/* Parameter words. */
PSA_API psa_status psa_param_parse(const char* text, psa_param** out);
PSA_API psa_status psa_param_create(const uint32_t* digits, size_t k,
                                    psa_param** out);
PSA_API void psa_param_free(psa_param* c);
PSA_API size_t psa_param_k(const psa_param* c);
PSA_API psa_status psa_param_format(const psa_param* c, char** out);

/* Digit words in text form. */
PSA_API psa_status psa_digits_parse(const char* text, psa_u32_array* out);
PSA_API psa_status psa_digits_format(const uint32_t* digits, size_t len,
                                     char** out);

/* Words. */
PSA_API psa_status psa_word_un(const psa_param* c, size_t n, psa_u32_array* out);
PSA_API psa_status psa_prefix(const psa_param* c, uint64_t m, psa_u32_array* out);
PSA_API psa_status psa_length_un(const psa_param* c, size_t n, char** out);
PSA_API psa_status psa_words_json(const psa_param* c, size_t upto, char** out);

/* Numeration. */
PSA_API psa_status psa_rep(const psa_param* c, const char* n, psa_u32_array* out);
PSA_API psa_status psa_greedy_rep(const psa_param* c, const char* n,
                                  psa_u32_array* out);
PSA_API psa_status psa_val(const psa_param* c, const uint32_t* digits,
                           size_t len, int checked, char** out);
PSA_API psa_status psa_is_greedy(const psa_param* c, int* out);
PSA_API psa_status psa_automaton_dot(const psa_param* c, char** out);
PSA_API psa_status psa_enumerate_json(const psa_param* c, size_t count,
                                      char** out);
PSA_API psa_status psa_automatic_letter(const psa_param* c, const char* n,
                                        uint32_t* out);
PSA_API psa_status psa_reduce_parry_json(const psa_param* c, size_t sigma_len,
                                         char** out);

/* Lyndon words. inverse_order selects the order with larger letters first. */
PSA_API psa_status psa_duval_json(const uint32_t* w, size_t len,
                                  int inverse_order, char** out);
PSA_API psa_status psa_is_anti_lyndon(const uint32_t* w, size_t len, int* out);

/* Attractors. */
PSA_API psa_status psa_is_attractor(const uint32_t* w, size_t len,
                                    const uint64_t* positions, size_t count,
                                    int* out);
PSA_API psa_status psa_attractor_for_prefix(const psa_param* c, uint64_t m,
                                            int verify, psa_u64_array* out);
PSA_API psa_status psa_smallest_attractor(const uint32_t* w, size_t len,
                                          size_t cap, psa_u64_array* out);
PSA_API psa_status psa_p_n(const psa_param* c, size_t n, char** out);
PSA_API psa_status psa_q_n(const psa_param* c, size_t n, int direct, char** out);

/* JSON reports, each with "schema": 1. cap 0 selects the default. */
PSA_API psa_status psa_attractor_json(const psa_param* c, uint64_t m,
                                      int minimal, int verify, int zero_based,
                                      char** out);
PSA_API psa_status psa_check_json(const psa_param* c, char** out);
PSA_API psa_status psa_ijl_json(const psa_param* c, size_t n_max, char** out);
PSA_API psa_status psa_profile_json(const psa_param* c, uint64_t m_max,
                                    size_t cap, int zero_based, char** out);
PSA_API psa_status psa_conjecture_json(const psa_param* c, uint64_t m_max,
                                       size_t cap, char** out);
PSA_API psa_status psa_qn_json(const psa_param* c, size_t n_max, char** out);

PSA_API psa_status psa_sweep(const psa_sweep_spec* spec, psa_format format,
                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* PARRYSA_PARRYSA_H_ */
