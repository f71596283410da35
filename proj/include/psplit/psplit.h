/*
   Copyright 2026 The psplit Authors

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

/* C interface to libpsplit. All strings are UTF-8 JSON or literal text.
   Strings returned through char** are owned by the caller and released with
   psplit_string_free. On failure the functions return a nonzero status and
   psplit_last_error() describes it (per thread). */

#ifndef PSPLIT_PSPLIT_H
#define PSPLIT_PSPLIT_H

#include <stdint.h>

#if defined(_WIN32)
#define PSPLIT_API __declspec(dllexport)
#else
#define PSPLIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psplit_status {
    PSPLIT_OK = 0,
    PSPLIT_E_INVALID_INPUT,
    PSPLIT_E_PARSE,
    PSPLIT_E_FIELD_MISMATCH,
    PSPLIT_E_DIVISION_BY_ZERO,
    PSPLIT_E_PRECISION_EXCEEDED,
    PSPLIT_E_EMPTY_POLYNOMIAL,
    PSPLIT_E_ARITY_MISMATCH,
    PSPLIT_E_HEIGHT_MISMATCH,
    PSPLIT_E_EMPTY_FORM,
    PSPLIT_E_NOT_SEPARABLE,
    PSPLIT_E_PRINCIPAL_PART_NOT_CERTIFIED,
    PSPLIT_E_TARGET_VALUATION_OUT_OF_RANGE,
    PSPLIT_E_NO_LINEAR_TERM,
    PSPLIT_E_SEARCH_SPACE_TOO_LARGE,
    PSPLIT_E_NOT_P_GROUP,
    PSPLIT_E_TRIVIAL_GROUP,
    PSPLIT_E_INVALID_GROUP_TABLE,
    PSPLIT_E_CONTRADICTORY_EVIDENCE,
    PSPLIT_E_NULL_ARGUMENT,
    PSPLIT_E_INTERNAL
} psplit_status;

typedef enum psplit_verdict {
    PSPLIT_SPLIT_SPECIAL = 0,
    PSPLIT_NOT_SPLIT_NOT_SPECIAL = 1,
    PSPLIT_UNDECIDED = 2
} psplit_verdict;

typedef enum psplit_h1_class {
    PSPLIT_H1_TRIVIAL = 0,
    PSPLIT_H1_NONTRIVIAL = 1,
    PSPLIT_H1_UNKNOWN = 2
} psplit_h1_class;

typedef struct psplit_polynomial psplit_polynomial;
typedef struct psplit_certificate psplit_certificate;
typedef struct psplit_group psplit_group;

typedef struct psplit_options {
    int64_t precision;      /* t-adic precision of series literals, default 16 */
    uint32_t budget;        /* substitution steps for the split search, default 8 */
    uint32_t search_degree; /* s-degree bound of isotropy searches, default 2 */
    uint64_t seed;          /* torsor sampling seed, default 0 */
    uint32_t torsor_samples;
} psplit_options;

PSPLIT_API void psplit_options_init(psplit_options* opts);

PSPLIT_API const char* psplit_version(void);
PSPLIT_API const char* psplit_status_string(psplit_status status);
PSPLIT_API const char* psplit_last_error(void);
PSPLIT_API void psplit_string_free(char* s);

PSPLIT_API psplit_status psplit_polynomial_from_json(const char* json, psplit_polynomial** out);
PSPLIT_API psplit_status psplit_polynomial_to_json(const psplit_polynomial* poly, char** out);
PSPLIT_API psplit_status psplit_polynomial_to_string(const psplit_polynomial* poly, char** out);
PSPLIT_API int psplit_polynomial_equal(const psplit_polynomial* a, const psplit_polynomial* b);
PSPLIT_API void psplit_polynomial_free(psplit_polynomial* poly);

/* opts may be NULL for the defaults. */
PSPLIT_API psplit_status psplit_classify(const psplit_polynomial* poly, const psplit_options* opts,
                                         psplit_certificate** out);
PSPLIT_API psplit_verdict psplit_certificate_verdict(const psplit_certificate* cert);
PSPLIT_API psplit_status psplit_certificate_to_json(const psplit_certificate* cert, char** out);
PSPLIT_API psplit_status psplit_certificate_from_json(const char* json, psplit_certificate** out);
PSPLIT_API void psplit_certificate_free(psplit_certificate* cert);

/* *ok is 1 when every piece of evidence replays against poly. trace may be
   NULL; otherwise it receives one line per check. */
PSPLIT_API psplit_status psplit_verify(const psplit_certificate* cert, const psplit_polynomial* poly, int* ok,
                                       char** trace);

/* Class of a series literal in H^1(k((t)), ker P). report receives JSON. */
PSPLIT_API psplit_status psplit_h1(const psplit_polynomial* poly, const char* target, const psplit_options* opts,
                                   psplit_h1_class* cls, char** report);

/* Bounded preimage search over exponents [vmin, vmax] and coefficient
   s-degree <= deg. enumerate != 0 scans tuples one by one instead of
   solving the linear system. */
PSPLIT_API psplit_status psplit_oracle(const psplit_polynomial* poly, const char* target, int64_t vmin, int64_t vmax,
                                       uint32_t deg, int enumerate, const psplit_options* opts, int* in_image,
                                       char** report);

PSPLIT_API psplit_status psplit_group_from_json(const char* json, psplit_group** out);
PSPLIT_API void psplit_group_free(psplit_group* group);
/* Frattini subgroup, elementary quotient rank and the non-specialness
   certificate of the constant (Z/p)^rank, as JSON. */
PSPLIT_API psplit_status psplit_frattini(const psplit_group* group, const psplit_options* opts, char** report);

#ifdef __cplusplus
}
#endif

#endif
