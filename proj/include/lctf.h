/*
   Copyright 2026 The lctf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C API of the lctf shared library: exact arithmetic over GF(q)[[t]]/t^M,
 * Weierstrass preparation, exact sublevel-set counting, and log-canonical
 * threshold estimates with certified lower bounds.
 *
 * Sessions are configured with a JSON document; commands take a JSON request
 * and return a JSON report. All reports are deterministic for a fixed
 * (config, request, seed) apart from the "timestamp" field.
 */

#ifndef LCTF_H
#define LCTF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lctf_status {
    LCTF_OK = 0,
    LCTF_E_USAGE = 1,
    LCTF_E_SYNTAX = 2,
    LCTF_E_UNKNOWN_VARIABLE = 3,
    LCTF_E_NON_INTEGRAL_COEFFICIENT = 4,
    LCTF_E_DIVISION_BY_ZERO = 5,
    LCTF_E_NOT_A_UNIT = 6,
    LCTF_E_PRECISION_EXCEEDED = 7,
    LCTF_E_PRECISION_EXHAUSTED = 8,
    LCTF_E_NOT_INTEGRAL = 9,
    LCTF_E_INDETERMINATE_INPUT = 10,
    LCTF_E_SEARCH_EXHAUSTED = 11,
    LCTF_E_CERTIFICATION_FAILED = 12,
    LCTF_E_BUDGET_EXCEEDED = 13,
    LCTF_E_INSUFFICIENT_DATA = 14,
    LCTF_E_CAP_EXCEEDED = 15,
    LCTF_E_IO = 16,
    LCTF_E_INTEGRITY = 17,
    LCTF_E_INTERNAL = 18
} lctf_status;

/* Opaque session handle. Sessions are not thread-safe; use one per thread. */
typedef struct lctf_session lctf_session;

/* Library version string ("major.minor.patch"). */
const char* lctf_version(void);

/* Stable name of a status code ("ok", "syntax", ...). */
const char* lctf_status_name(lctf_status status);

/*
 * Create a session from a JSON configuration:
 *   {"q": {"p": 2, "e": 1, "modulus": [1,1,1]}, "M": 6, "n": 2,
 *    "radius_j": 0, "strategy": "pruned", "workers": 1,
 *    "budget": 100000000, "seed": 0, "cache": "counts.jsonl"}
 * On failure *out_session is NULL and lctf_last_error(NULL) describes why.
 */
lctf_status lctf_session_create(const char* config_json, lctf_session** out_session);

void lctf_session_destroy(lctf_session* session);

/*
 * Run one command ("count", "lct-estimate", "prepare", "verify-remez",
 * "verify-smallball", "zeta", "example-curve") with a JSON request.
 * On success *out_report receives a heap-allocated JSON document; release it
 * with lctf_free. On failure the return status classifies the error and
 * lctf_last_error(session) holds a JSON error object.
 */
lctf_status lctf_run(lctf_session* session, const char* command, const char* request_json,
                     char** out_report);

/*
 * JSON error object for the most recent failure: with a session, the last
 * failure on that session; with NULL, the last lctf_session_create failure
 * on this thread. The pointer stays valid until the next call on the same
 * session (or thread, for NULL).
 */
const char* lctf_last_error(const lctf_session* session);

/*
 * Canonical form of a polynomial in the session ring; exercises the parser
 * round-trip. Release *out_canonical with lctf_free.
 */
lctf_status lctf_poly_canonical(lctf_session* session, const char* text, char** out_canonical);

void lctf_free(char* buffer);

#ifdef __cplusplus
}
#endif

#endif /* LCTF_H */
