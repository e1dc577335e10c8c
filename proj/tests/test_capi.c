#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "spcsp/spcsp.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* one_in_three = "{\"pairs\":[{\"I\":[1],\"J\":[1,2],\"arity\":3}]}";
static const char* hard =
    "{\"pairs\":[{\"I\":[0],\"J\":[0],\"arity\":1},{\"I\":[1],\"J\":[1],\"arity\":1},"
    "{\"I\":[1],\"J\":[1,2],\"arity\":3},{\"I\":[1],\"J\":[1,2],\"arity\":4}]}";

static void test_classify(void) {
  spcsp_template* t = NULL;
  spcsp_classification* c = NULL;
  char* out = NULL;
  EXPECT(spcsp_template_parse(one_in_three, &t) == SPCSP_OK);
  EXPECT(spcsp_classify(t, &c) == SPCSP_OK);
  EXPECT(spcsp_classification_tractable(c) == 1);
  EXPECT(spcsp_classification_to_json(c, 0, &out) == SPCSP_OK);
  EXPECT(strstr(out, "\"tag\":\"AT\"") != NULL);
  spcsp_string_free(out);
  spcsp_classification_free(c);
  spcsp_template_free(t);

  EXPECT(spcsp_template_parse(hard, &t) == SPCSP_OK);
  EXPECT(spcsp_classify(t, &c) == SPCSP_OK);
  EXPECT(spcsp_classification_tractable(c) == 0);
  EXPECT(spcsp_classification_to_json(c, 1, &out) == SPCSP_OK);
  EXPECT(strstr(out, "\"certificate\"") != NULL);
  spcsp_string_free(out);
  spcsp_classification_free(c);
  spcsp_template_free(t);
}

static void test_errors(void) {
  spcsp_template* t = NULL;
  EXPECT(spcsp_template_parse("{", &t) == SPCSP_ERR_INVALID_INPUT);
  EXPECT(t == NULL);
  EXPECT(strlen(spcsp_last_error()) > 0);
  EXPECT(spcsp_template_parse("{\"pairs\":[{\"I\":[4],\"J\":[0],\"arity\":3}]}", &t) ==
         SPCSP_ERR_OUT_OF_RANGE_WEIGHT);
  EXPECT(spcsp_template_parse(NULL, &t) == SPCSP_ERR_NULL_ARGUMENT);
  EXPECT(strcmp(spcsp_status_name(SPCSP_ERR_NO_INSTANCE), "NoInstance") == 0);

  spcsp_classification* c = NULL;
  EXPECT(spcsp_template_parse("{\"pairs\":[{\"I\":[1],\"J\":[0],\"arity\":1},{\"I\":[1],\"J\":[1],\"arity\":1}]}",
                              &t) == SPCSP_OK);
  EXPECT(spcsp_classify(t, &c) == SPCSP_ERR_NO_PROMISE_HOMOMORPHISM);
  spcsp_template_free(t);
  spcsp_template_free(NULL);
}

static void test_solve(void) {
  spcsp_template* t = NULL;
  spcsp_instance* inst = NULL;
  char* out = NULL;
  int ok = 0;
  EXPECT(spcsp_template_parse(one_in_three, &t) == SPCSP_OK);
  EXPECT(spcsp_instance_parse("{\"variables\":5,\"constraints\":[{\"pair\":0,\"scope\":[0,1,2]},"
                              "{\"pair\":0,\"scope\":[2,3,4]}]}",
                              &inst) == SPCSP_OK);
  EXPECT(spcsp_solve(t, inst, &out) == SPCSP_OK);
  EXPECT(spcsp_check(t, inst, out, 1, &ok) == SPCSP_OK);
  EXPECT(ok == 1);
  spcsp_string_free(out);
  EXPECT(spcsp_check(t, inst, "[1,1,1,1,1]", 1, &ok) == SPCSP_OK);
  EXPECT(ok == 0);
  spcsp_instance_free(inst);

  EXPECT(spcsp_instance_parse("{\"variables\":2,\"constraints\":[{\"pair\":1,\"scope\":[0]}]}", &inst) ==
         SPCSP_OK);
  EXPECT(spcsp_solve(t, inst, &out) == SPCSP_ERR_INVALID_INSTANCE);
  spcsp_instance_free(inst);
  spcsp_template_free(t);

  EXPECT(spcsp_template_parse("{\"pairs\":[{\"I\":[0],\"J\":[0],\"arity\":1},{\"I\":[2],\"J\":[2],\"arity\":2}]}",
                              &t) == SPCSP_OK);
  EXPECT(spcsp_instance_parse("{\"variables\":2,\"constraints\":[{\"pair\":0,\"scope\":[0]},"
                              "{\"pair\":1,\"scope\":[0,1]}]}",
                              &inst) == SPCSP_OK);
  EXPECT(spcsp_solve(t, inst, &out) == SPCSP_ERR_NO_INSTANCE);
  spcsp_instance_free(inst);
  spcsp_template_free(t);
}

static void test_analyze_and_relax(void) {
  spcsp_function* f = NULL;
  char* out = NULL;
  char* warnings = NULL;
  EXPECT(spcsp_function_from_hex("e8", 3, &f) == SPCSP_OK);
  EXPECT(spcsp_analyze(f, "minimal-onesets,packing", NULL, &out) == SPCSP_OK);
  EXPECT(strstr(out, "[[0,1],[0,2],[1,2]]") != NULL);
  spcsp_string_free(out);
  EXPECT(spcsp_analyze(f, "polymorphism", NULL, &out) == SPCSP_ERR_INVALID_INPUT);
  spcsp_function_free(f);
  EXPECT(spcsp_function_from_hex("zz", 3, &f) == SPCSP_ERR_INVALID_INPUT);

  spcsp_template* t = NULL;
  EXPECT(spcsp_template_parse("{\"pairs\":[{\"I\":[0,1,4,5],\"J\":[0,1,2,3,4,5],\"arity\":5}]}", &t) ==
         SPCSP_OK);
  EXPECT(spcsp_relax(t, "move-left,move-right", -1, &out, &warnings) == SPCSP_OK);
  EXPECT(strstr(out, "{\"I\":[0,3],\"J\":[0,1,2,3],\"arity\":3}") != NULL);
  spcsp_string_free(out);
  spcsp_string_free(warnings);
  EXPECT(spcsp_enumerate(t, 1, 1, 0, 1, &out) == SPCSP_OK);
  spcsp_string_free(out);
  EXPECT(spcsp_enumerate(t, 5, 1, 0, 1, &out) == SPCSP_ERR_ARITY_TOO_LARGE);
  spcsp_template_free(t);
}

static void test_oracle(void) {
  char* out = NULL;
  uint64_t fails = 1;
  EXPECT(spcsp_oracle_suites(&out) == SPCSP_OK);
  EXPECT(strstr(out, "\"classify-goldens\"") != NULL);
  spcsp_string_free(out);
  EXPECT(spcsp_oracle_run("classify-goldens", 1, 1, &out, &fails) == SPCSP_OK);
  EXPECT(fails == 0);
  spcsp_string_free(out);
  EXPECT(spcsp_oracle_run("no-such-suite", 1, 1, &out, &fails) == SPCSP_ERR_INVALID_INPUT);
}

int main(void) {
  EXPECT(spcsp_version() != NULL);
  test_classify();
  test_errors();
  test_solve();
  test_analyze_and_relax();
  test_oracle();
  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  return failures ? 1 : 0;
}
