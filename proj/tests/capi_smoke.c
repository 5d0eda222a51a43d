/* Minimal round trip through the shared library from plain C: parse a
 * poset, run the pipeline, and look for the expected polynomial text. */
#include <stdio.h>
#include <string.h>

#include "qnewton.h"

static int fail(const char* step) {
  fprintf(stderr, "capi_smoke: %s failed: %s\n", step, qn_last_error());
  return 1;
}

int main(void) {
  qn_poset* p = NULL;
  qn_result* r = NULL;
  qn_report* rep = NULL;
  char* text = NULL;
  int bad = 0;

  if (qn_poset_parse_json("{\"m\":1,\"covers\":[]}", &p) != QN_OK)
    return fail("parse");
  if (qn_ehrhart(p, 0, &r) != QN_OK)
    return fail("ehrhart");
  if (qn_result_to_json(r, &text) != QN_OK)
    return fail("serialize");
  if (strstr(text, "q*x + 1") == NULL) {
    fprintf(stderr, "capi_smoke: unexpected result json: %s\n", text);
    bad = 1;
  }
  qn_string_free(text);

  if (!bad) {
    if (qn_verify(p, 0, 0, &rep) != QN_OK)
      return fail("verify");
    if (qn_report_passed(rep) != 1) {
      fprintf(stderr, "capi_smoke: verification reported a failure\n");
      bad = 1;
    }
  }

  qn_report_free(rep);
  qn_result_free(r);
  qn_poset_free(p);
  return bad;
}
