// Copyright 2026 The montyhall Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONTYHALL_MONTYHALL_H_
#define MONTYHALL_MONTYHALL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MH_API __declspec(dllexport)
#else
#define MH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mh_status {
  MH_OK = 0,
  MH_INVALID_ARGUMENT = 1,
  MH_UNKNOWN_FIXTURE = 2,
  MH_SINGULAR = 3,
  MH_INFEASIBLE = 4,
  MH_WRONG_STATE = 5,
  MH_NOT_FOUND = 6,
  MH_IO = 7,
  MH_INTERNAL = 99
} mh_status;

typedef enum mh_format { MH_FORMAT_JSON = 0, MH_FORMAT_TABLE = 1, MH_FORMAT_CSV = 2 } mh_format;

typedef struct mh_engine mh_engine;
typedef struct mh_result mh_result;
typedef struct mh_service mh_service;

MH_API const char* mh_version(void);
MH_API const char* mh_status_name(mh_status status);

/* Message for the most recent failure on the calling thread. */
MH_API const char* mh_last_error(void);

MH_API mh_status mh_parse_format(const char* name, mh_format* out);

MH_API mh_status mh_engine_create(mh_engine** out);
MH_API void mh_engine_destroy(mh_engine* engine);
/* 0 picks the hardware concurrency. */
MH_API mh_status mh_engine_set_workers(mh_engine* engine, unsigned workers);

/* Results own their text until mh_result_destroy. */
MH_API const char* mh_result_text(const mh_result* result);
MH_API size_t mh_result_size(const mh_result* result);
/* 1 when every exact check attached to the command held. */
MH_API int mh_result_verified(const mh_result* result);
MH_API void mh_result_destroy(mh_result* result);

/*
 * Sources name a fixture (C, c3, zerosum, alpha, beta, beta:<Q>, gamma, delta,
 * diag:<d1,...>) or a JSON matrix file.
 */
MH_API mh_status mh_build_matrix(mh_engine* engine, const char* fixture, mh_format format,
                                 mh_result** out);
/* kind: weak|strict; policy: rows_then_columns|fixpoint */
MH_API mh_status mh_reduce(mh_engine* engine, const char* source, const char* kind,
                           const char* policy, mh_format format, mh_result** out);
/* method: lp|indifference|inverse|diagonal|all */
MH_API mh_status mh_solve(mh_engine* engine, const char* source, const char* method,
                          mh_format format, mh_result** out);
/* side: contestant|host */
MH_API mh_status mh_enumerate_minimax(mh_engine* engine, const char* source, const char* side,
                                      mh_format format, mh_result** out);
/* mode: pure|mixed|all */
MH_API mh_status mh_nash(mh_engine* engine, const char* source, const char* mode,
                         mh_format format, mh_result** out);
MH_API mh_status mh_best_response(mh_engine* engine, const char* host, mh_format format,
                                  mh_result** out);
MH_API mh_status mh_simulate(mh_engine* engine, const char* contestant, const char* host,
                             uint64_t trials, uint64_t seed, mh_format format, mh_result** out);
MH_API mh_status mh_paper_report(mh_engine* engine, mh_format format, mh_result** out);

/* Conditional win probabilities after the reveal, as JSON. */
MH_API mh_status mh_advice(mh_engine* engine, const char* host, int pick, int revealed,
                           mh_result** out);

MH_API mh_status mh_service_create(const uint64_t* seed, mh_service** out);
/* port 0 binds an ephemeral port; the chosen port is stored in bound_port. */
MH_API mh_status mh_service_bind(mh_service* service, const char* host, int port,
                                 int* bound_port);
/* Blocks until mh_service_stop is called from another thread. */
MH_API mh_status mh_service_run(mh_service* service);
MH_API mh_status mh_service_stop(mh_service* service);
MH_API void mh_service_destroy(mh_service* service);

#ifdef __cplusplus
}
#endif

#endif  // MONTYHALL_MONTYHALL_H_
