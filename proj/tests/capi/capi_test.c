/* Plain C client of the shared library; no C++ in sight. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ebc/ebc.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static int contains(const char* hay, const char* needle) {
  return hay != NULL && strstr(hay, needle) != NULL;
}

static char* eb_report(const char* expr, unsigned threads) {
  ebc_options o;
  ebc_ring* r = NULL;
  char* out = NULL;
  ebc_options_init(&o);
  o.threads = threads;
  if (ebc_ring_parse(expr, &o, &r) != EBC_OK) return NULL;
  if (ebc_eb_ring(r, &o, &out) != EBC_OK) out = NULL;
  ebc_ring_free(r);
  return out;
}

static void test_defaults(void) {
  ebc_options o;
  memset(&o, 0xff, sizeof o);
  ebc_options_init(&o);
  EXPECT(o.structure_cap == 4096);
  EXPECT(o.eb_cap == 128);
  EXPECT(o.depth_budget == 0);
  EXPECT(o.threads == 1);
  EXPECT(o.stats == 0);
  EXPECT(strlen(ebc_version()) > 0);
}

static void test_ring_lifecycle(void) {
  ebc_ring* r = NULL;
  ebc_semigroup* s = NULL;
  EXPECT(ebc_ring_parse("GF(9) x Z/4", NULL, &r) == EBC_OK);
  EXPECT(ebc_ring_order(r) == 36);
  EXPECT(strcmp(ebc_ring_label(r), "GF(9) x Z/4") == 0);
  EXPECT(ebc_semigroup_of_ring(r, &s) == EBC_OK);
  EXPECT(ebc_semigroup_order(s) == 36);
  ebc_semigroup_free(s);
  ebc_ring_free(r);
  ebc_ring_free(NULL);
  ebc_semigroup_free(NULL);
  ebc_string_free(NULL);
}

static void test_errors(void) {
  ebc_ring* r = NULL;
  ebc_options o;
  char* out = NULL;
  EXPECT(ebc_ring_parse("GF(6)", NULL, &r) == EBC_INPUT_ERROR);
  EXPECT(r == NULL);
  EXPECT(contains(ebc_last_error(), "3"));
  EXPECT(ebc_ring_parse(NULL, NULL, &r) == EBC_INPUT_ERROR);
  EXPECT(ebc_ring_parse("Z/4", NULL, NULL) == EBC_INPUT_ERROR);

  ebc_options_init(&o);
  o.structure_cap = 10;
  EXPECT(ebc_ring_parse("Z/12", &o, &r) == EBC_RESOURCE_ERROR);
  EXPECT(r == NULL);

  EXPECT(ebc_ring_from_json("{\"order\": 2}", NULL, &r) == EBC_INPUT_ERROR);
  EXPECT(ebc_ring_from_json("not json", NULL, &r) == EBC_INPUT_ERROR);
  EXPECT(ebc_davenport("2,3", NULL, &out) == EBC_INPUT_ERROR);
  EXPECT(out == NULL);
  EXPECT(ebc_davenport("0", NULL, &out) == EBC_INPUT_ERROR);
  EXPECT(ebc_analyze(NULL, NULL, &out) == EBC_INPUT_ERROR);

  /* eb above the exact-solver cap */
  ebc_options_init(&o);
  o.eb_cap = 16;
  EXPECT(ebc_ring_parse("Z/20", &o, &r) == EBC_OK);
  EXPECT(ebc_eb_ring(r, &o, &out) == EBC_RESOURCE_ERROR);
  EXPECT(out == NULL);
  ebc_ring_free(r);
}

static void test_reports(void) {
  ebc_ring* r = NULL;
  ebc_semigroup* s = NULL;
  ebc_options o;
  char* out = NULL;

  out = eb_report("Z/4", 1);
  EXPECT(contains(out, "\"value\": 3"));
  EXPECT(contains(out, "\"schema_version\": \"1\""));
  EXPECT(!contains(out, "timings"));
  ebc_string_free(out);

  out = eb_report("Z/1", 1);
  EXPECT(contains(out, "\"structure\": null"));
  EXPECT(contains(out, "\"value\": 1"));
  ebc_string_free(out);

  ebc_options_init(&o);
  o.stats = 1;
  EXPECT(ebc_ring_parse("Z/12", &o, &r) == EBC_OK);
  EXPECT(ebc_analyze(r, &o, &out) == EBC_OK);
  EXPECT(contains(out, "\"timings\""));
  EXPECT(contains(out, "\"jacobson_radical\""));
  ebc_string_free(out);
  ebc_ring_free(r);

  /* depth budget: report still produced */
  ebc_options_init(&o);
  o.depth_budget = 3;
  EXPECT(ebc_ring_parse("Z/16", &o, &r) == EBC_OK);
  EXPECT(ebc_eb_ring(r, &o, &out) == EBC_BUDGET_EXCEEDED);
  EXPECT(contains(out, "\"exceeds_budget\""));
  EXPECT(contains(out, "\"lower_bound\": 4"));
  ebc_string_free(out);
  ebc_ring_free(r);

  EXPECT(ebc_davenport("2,2", NULL, &out) == EBC_OK);
  EXPECT(contains(out, "\"davenport\": 3"));
  EXPECT(contains(out, "\"closed_form_agrees\": true"));
  ebc_string_free(out);

  EXPECT(ebc_ring_parse("Z/105", NULL, &r) == EBC_OK);
  EXPECT(ebc_certify(r, NULL, &out) == EBC_OK);
  EXPECT(contains(out, "\"verified_free\": true"));
  EXPECT(contains(out, "\"bound_holds\": true"));
  ebc_string_free(out);
  ebc_ring_free(r);

  /* bare semigroup: the null semigroup on three elements */
  EXPECT(ebc_semigroup_from_json("{\"order\": 3, \"mul\": [[0,0,0],[0,0,0],[0,0,0]]}", NULL, &s) ==
         EBC_OK);
  EXPECT(ebc_eb_semigroup(s, NULL, &out) == EBC_OK);
  EXPECT(contains(out, "\"value\": 2"));
  ebc_string_free(out);
  ebc_semigroup_free(s);

  /* Z/3 from raw tables, flat */
  EXPECT(ebc_ring_from_json("{\"order\": 3, \"add\": [0,1,2,1,2,0,2,0,1], \"mul\": [0,0,0,0,1,2,0,2,1]}",
                            NULL, &r) == EBC_OK);
  EXPECT(ebc_ring_order(r) == 3);
  ebc_ring_free(r);

  EXPECT(ebc_verify_corpus("Z/6\n# c\nZ/2 x Z/4\n", "mini", NULL, &out) == EBC_OK);
  EXPECT(contains(out, "\"passed\": true"));
  ebc_string_free(out);
  EXPECT(ebc_verify_corpus("Z/6\nZ/\n", "mini", NULL, &out) == EBC_INPUT_ERROR);
  EXPECT(contains(ebc_last_error(), "mini:2:"));
}

static void test_determinism(void) {
  const char* rings[] = {"Z/24", "GF(9) x Z/4", "Z/2 x Z/3 x Z/5"};
  size_t i;
  for (i = 0; i < sizeof rings / sizeof rings[0]; ++i) {
    char* a = eb_report(rings[i], 1);
    char* b = eb_report(rings[i], 1);
    char* c = eb_report(rings[i], 8);
    EXPECT(a != NULL && b != NULL && c != NULL);
    if (a && b && c) {
      EXPECT(strcmp(a, b) == 0);
      EXPECT(strcmp(a, c) == 0);
    }
    ebc_string_free(a);
    ebc_string_free(b);
    ebc_string_free(c);
  }
}

int main(void) {
  test_defaults();
  test_ring_lifecycle();
  test_errors();
  test_reports();
  test_determinism();
  if (failures != 0) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
