/*
 * Copyright 2026 The kappanet Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the kappanet shared library.
 *
 * Every fallible call returns a kn_status. On failure a one-line message is
 * available from kn_last_error() until the next call on the same thread.
 * Strings returned through `char** out` belong to the caller and are
 * released with kn_string_free(); networks with kn_network_free().
 * Evidence and fault lists use the text form "Var=value,Var=value".
 */

#ifndef KAPPANET_KAPPANET_H_
#define KAPPANET_KAPPANET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KAPPANET_API __declspec(dllexport)
#else
#define KAPPANET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kn_network kn_network;

typedef enum kn_status {
  KN_OK = 0,
  KN_INVALID_ARGUMENT = 1,
  KN_CONTRACT_VIOLATION = 2,
  KN_VALIDATION = 3,
  KN_PARSE = 4,
  KN_IMPOSSIBLE_EVIDENCE = 5,
  KN_IO = 6,
  KN_INTERNAL = 7
} kn_status;

typedef enum kn_calculus { KN_PROBABILITY = 0, KN_KAPPA = 1 } kn_calculus;

/* A probability (KN_PROBABILITY) or a rank (KN_KAPPA; `infinite` set for
 * the impossible rank). */
typedef struct kn_degree {
  kn_calculus calculus;
  double probability;
  uint64_t rank;
  int infinite;
} kn_degree;

KAPPANET_API const char* kn_last_error(void);
KAPPANET_API const char* kn_status_name(kn_status status);
KAPPANET_API void kn_string_free(char* text);

/* Networks */
KAPPANET_API kn_status kn_network_load(const char* path, kn_network** out);
KAPPANET_API kn_status kn_network_parse(const char* text, size_t length,
                                        kn_network** out);
KAPPANET_API kn_status kn_network_save(const kn_network* net,
                                       const char* path);
KAPPANET_API kn_status kn_network_serialize(const kn_network* net, char** out);
KAPPANET_API void kn_network_free(kn_network* net);

KAPPANET_API kn_calculus kn_network_calculus(const kn_network* net);
KAPPANET_API size_t kn_network_variable_count(const kn_network* net);
/* NULL when `index` is out of range. Owned by the network. */
KAPPANET_API const char* kn_network_variable_name(const kn_network* net,
                                                  size_t index);

/* Translates a probability network into a kappa network. */
KAPPANET_API kn_status kn_network_abstract(const kn_network* net,
                                           double epsilon, kn_network** out);

/* Default-quantified chain X1..X<length> and fork Y -> X1..X<effects>. */
KAPPANET_API kn_status kn_chain_network(size_t length, double epsilon,
                                        kn_calculus calculus,
                                        kn_network** out);
KAPPANET_API kn_status kn_fork_network(size_t effects, kn_calculus calculus,
                                       kn_network** out);

/* Inference */

/* Writes one normalized degree per target value. *count receives the domain
 * size; KN_INVALID_ARGUMENT when it exceeds `capacity`. */
KAPPANET_API kn_status kn_query(const kn_network* net, const char* evidence,
                                const char* target, kn_degree* degrees,
                                size_t capacity, size_t* count);

KAPPANET_API kn_status kn_translate_degree(double probability, double epsilon,
                                           kn_degree* out);

/* Text reports */
KAPPANET_API kn_status kn_report_query(const kn_network* net,
                                       const char* evidence,
                                       const char* target, char** out);
KAPPANET_API kn_status kn_report_compare(const kn_network* net,
                                         const char* evidence,
                                         const char* target, double epsilon,
                                         int raw, char** out);
/* With no epsilons, one fault ranking per run under the network's own
 * calculus; otherwise an epsilon sweep of a probability network. */
KAPPANET_API kn_status kn_report_diagnose(const kn_network* net,
                                          const char* const* evidence_runs,
                                          size_t run_count,
                                          const char* faults,
                                          const double* epsilons,
                                          size_t epsilon_count, char** out);
KAPPANET_API kn_status kn_report_chain(size_t length, double epsilon,
                                       int figure, char** out);
KAPPANET_API kn_status kn_report_fork(size_t effects, size_t observe,
                                      int figure, char** out);

/* Figure data tables. The chain table takes `size` = length and uses
 * `epsilon`; the fork tables take `size` = effect count. */
typedef enum kn_figure {
  KN_FIGURE_CHAIN_BELIEF = 4,
  KN_FIGURE_FORK_PROBABILITY = 5,
  KN_FIGURE_FORK_MARGIN = 6
} kn_figure;

KAPPANET_API kn_status kn_figure_data(int figure, size_t size, double epsilon,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* KAPPANET_KAPPANET_H_ */
