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

/* Exercises the public C header from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "psplit/psplit.h"

static int failures = 0;

#define CHECK(cond)                                                           \
    do {                                                                      \
        if (!(cond)) {                                                        \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

static const char* ANISO =
    "{\"p\":2,\"q\":2,\"variables\":[\"x\",\"y\"],\"terms\":[{\"var\":\"x\",\"height\":1,\"coeff\":\"1\"},"
    "{\"var\":\"x\",\"height\":0,\"coeff\":\"1\"},{\"var\":\"y\",\"height\":1,\"coeff\":\"s\"}]}";
static const char* SPLIT =
    "{\"p\":2,\"q\":2,\"variables\":[\"x\",\"y\"],\"terms\":[{\"var\":\"y\",\"height\":0,\"coeff\":\"1\"},"
    "{\"var\":\"x\",\"height\":1,\"coeff\":\"1\"}]}";
static const char* Z4 = "{\"order\":4,\"table\":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}";

static void test_roundtrip(void) {
    psplit_polynomial* p = NULL;
    psplit_polynomial* q = NULL;
    char* json = NULL;
    char* text = NULL;
    CHECK(psplit_polynomial_from_json(ANISO, &p) == PSPLIT_OK);
    CHECK(psplit_polynomial_to_json(p, &json) == PSPLIT_OK);
    CHECK(psplit_polynomial_from_json(json, &q) == PSPLIT_OK);
    CHECK(psplit_polynomial_equal(p, q));
    CHECK(psplit_polynomial_to_string(p, &text) == PSPLIT_OK);
    CHECK(strcmp(text, "x^2 + x + s*y^2") == 0);
    psplit_string_free(text);
    psplit_string_free(json);
    psplit_polynomial_free(q);
    psplit_polynomial_free(p);
}

static void test_errors(void) {
    psplit_polynomial* p = NULL;
    CHECK(psplit_polynomial_from_json("{", &p) == PSPLIT_E_PARSE);
    CHECK(p == NULL);
    CHECK(strlen(psplit_last_error()) > 0);
    CHECK(psplit_polynomial_from_json(NULL, &p) == PSPLIT_E_NULL_ARGUMENT);
    CHECK(psplit_polynomial_from_json(
              "{\"p\":2,\"q\":2,\"variables\":[\"x\"],\"terms\":[{\"var\":\"x\",\"height\":1,\"coeff\":\"1\"}]}",
              &p) == PSPLIT_OK);
    psplit_certificate* c = NULL;
    CHECK(psplit_classify(p, NULL, &c) == PSPLIT_E_NOT_SEPARABLE);
    CHECK(c == NULL);
    CHECK(strcmp(psplit_status_string(PSPLIT_E_NOT_SEPARABLE), "NotSeparable") == 0);
    psplit_polynomial_free(p);
}

static void test_classify_verify(void) {
    psplit_polynomial* aniso = NULL;
    psplit_polynomial* split = NULL;
    psplit_certificate* c = NULL;
    psplit_certificate* back = NULL;
    psplit_options opts;
    char* json = NULL;
    char* trace = NULL;
    int ok = 0;

    psplit_options_init(&opts);
    CHECK(opts.precision == 16 && opts.budget == 8);
    CHECK(psplit_polynomial_from_json(ANISO, &aniso) == PSPLIT_OK);
    CHECK(psplit_polynomial_from_json(SPLIT, &split) == PSPLIT_OK);

    CHECK(psplit_classify(aniso, &opts, &c) == PSPLIT_OK);
    CHECK(psplit_certificate_verdict(c) == PSPLIT_NOT_SPLIT_NOT_SPECIAL);
    CHECK(psplit_verify(c, aniso, &ok, &trace) == PSPLIT_OK);
    CHECK(ok == 1);
    psplit_string_free(trace);
    CHECK(psplit_verify(c, split, &ok, NULL) == PSPLIT_OK);
    CHECK(ok == 0);

    CHECK(psplit_certificate_to_json(c, &json) == PSPLIT_OK);
    CHECK(strstr(json, "\"verdict\": \"NOT_SPLIT_NOT_SPECIAL\"") != NULL);
    CHECK(psplit_certificate_from_json(json, &back) == PSPLIT_OK);
    CHECK(psplit_verify(back, aniso, &ok, NULL) == PSPLIT_OK);
    CHECK(ok == 1);
    psplit_string_free(json);
    psplit_certificate_free(back);
    psplit_certificate_free(c);

    CHECK(psplit_classify(split, &opts, &c) == PSPLIT_OK);
    CHECK(psplit_certificate_verdict(c) == PSPLIT_SPLIT_SPECIAL);
    CHECK(psplit_verify(c, split, &ok, NULL) == PSPLIT_OK);
    CHECK(ok == 1);
    psplit_certificate_free(c);

    psplit_polynomial_free(split);
    psplit_polynomial_free(aniso);
}

static void test_h1_oracle(void) {
    psplit_polynomial* aniso = NULL;
    psplit_h1_class cls = PSPLIT_H1_UNKNOWN;
    char* report = NULL;
    int in_image = -1;
    CHECK(psplit_polynomial_from_json(ANISO, &aniso) == PSPLIT_OK);
    CHECK(psplit_h1(aniso, "t^-1", NULL, &cls, &report) == PSPLIT_OK);
    CHECK(cls == PSPLIT_H1_NONTRIVIAL);
    psplit_string_free(report);
    CHECK(psplit_oracle(aniso, "t^-1", -2, 2, 2, 0, NULL, &in_image, &report) == PSPLIT_OK);
    CHECK(in_image == 0);
    CHECK(strstr(report, "NotInWindow") != NULL);
    psplit_string_free(report);
    CHECK(psplit_oracle(aniso, "t^-2 + t^-1", -1, 1, 0, 1, NULL, &in_image, NULL) == PSPLIT_OK);
    CHECK(in_image == 1);
    CHECK(psplit_oracle(aniso, "t^-1 +", -1, 1, 0, 0, NULL, &in_image, NULL) == PSPLIT_E_PARSE);
    psplit_polynomial_free(aniso);
}

static void test_frattini(void) {
    psplit_group* g = NULL;
    char* report = NULL;
    CHECK(psplit_group_from_json(Z4, &g) == PSPLIT_OK);
    CHECK(psplit_frattini(g, NULL, &report) == PSPLIT_OK);
    CHECK(strstr(report, "\"rank\": 1") != NULL);
    psplit_string_free(report);
    psplit_group_free(g);
    CHECK(psplit_group_from_json("{\"order\":2,\"table\":[[0,0],[0,0]]}", &g) == PSPLIT_E_INVALID_GROUP_TABLE);
}

int main(void) {
    CHECK(strcmp(psplit_version(), "0.1.0") == 0);
    test_roundtrip();
    test_errors();
    test_classify_verify();
    test_h1_oracle();
    test_frattini();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("capi: all checks passed\n");
    return 0;
}
