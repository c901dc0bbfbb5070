/* Plain C client of the shared library. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "resint/resint.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* link_job =
    "# 2x3 minors linked by two of them\n"
    "field Fp 32003\n"
    "ring x,y,z\n"
    "ideal I = xz-y^2, x^2-y*z, x*y-z^2\n"
    "ideal a = xz-y^2, x^2-y*z\n";

static resint_status run_text(const char* text, const char* command, char** out) {
  resint_job* job = NULL;
  resint_status st = resint_job_parse(text, &job);
  if (st != RESINT_OK) return st;
  st = resint_run(job, command, out);
  resint_job_free(job);
  return st;
}

int main(void) {
  char* out = NULL;
  resint_job* job = NULL;

  EXPECT(strlen(resint_version()) > 0);
  EXPECT(strcmp(resint_status_name(RESINT_ERR_BUDGET), "budget exceeded") == 0);

  /* residual report for the link */
  EXPECT(run_text(link_job, "residual", &out) == RESINT_OK);
  EXPECT(out && strstr(out, "\"reg_bound\": 0"));
  EXPECT(out && strstr(out, "\"reg_actual\": 0"));
  EXPECT(out && strstr(out, "\"tight\": true"));
  resint_string_free(out);
  out = NULL;

  /* same input twice gives byte-identical reports */
  {
    char* again = NULL;
    EXPECT(run_text(link_job, "en", &out) == RESINT_OK);
    EXPECT(run_text(link_job, "en", &again) == RESINT_OK);
    EXPECT(out && again && strcmp(out, again) == 0);
    resint_string_free(again);
    resint_string_free(out);
    out = NULL;
  }

  /* parse errors: status 1, message names the line */
  EXPECT(resint_job_parse("ring x,y\nideal I = x+\n", &job) == RESINT_OK);
  EXPECT(resint_run(job, "betti", &out) == RESINT_ERR_PARSE);
  EXPECT(strstr(resint_last_error(), "ideal I") != NULL);
  resint_string_free(out);
  resint_job_free(job);
  out = NULL;
  EXPECT(resint_job_parse("ring x\nfrobnicate\n", &job) == RESINT_ERR_PARSE);
  EXPECT(job == NULL);
  EXPECT(strstr(resint_last_error(), "line 2") != NULL);

  /* hypothesis failure still yields a report */
  EXPECT(run_text("ring x,y,z\nideal I = x,y,z\nideal a = x\n", "en", &out) == RESINT_ERR_HYPOTHESIS);
  EXPECT(out && strstr(out, "\"error\": \"hypothesis\""));
  resint_string_free(out);
  out = NULL;
  EXPECT(run_text("ring x,y,z\nideal I = x*z-y^2, x^2-y*z, x*y-z^2\nideal a = x*z-y^2\n", "residual", &out) ==
         RESINT_ERR_HYPOTHESIS);
  EXPECT(out && strstr(out, "\"residual\": false"));
  resint_string_free(out);
  out = NULL;

  /* budget: a degree cap below the inputs */
  EXPECT(resint_job_parse(link_job, &job) == RESINT_OK);
  EXPECT(resint_job_set_option(job, "max-degree", "1") == RESINT_OK);
  EXPECT(resint_run(job, "quotient", &out) == RESINT_ERR_BUDGET);
  resint_string_free(out);
  out = NULL;
  EXPECT(resint_job_set_option(job, "budget", "-3") == RESINT_ERR_PARSE);
  EXPECT(resint_job_set_option(job, "field", "Fp 12") == RESINT_ERR_PARSE);
  EXPECT(resint_job_set_option(job, "field", "Q") == RESINT_OK);
  EXPECT(resint_job_set_option(job, "max-degree", "40") == RESINT_OK);
  EXPECT(resint_run(job, "quotient", &out) == RESINT_OK);
  EXPECT(out && strstr(out, "\"field\": \"Q\""));
  resint_string_free(out);
  resint_job_free(job);
  out = NULL;

  /* ring-free commands */
  EXPECT(resint_job_new(&job) == RESINT_OK);
  EXPECT(resint_job_set_option(job, "m", "2") == RESINT_OK);
  EXPECT(resint_job_set_option(job, "t", "3") == RESINT_OK);
  EXPECT(resint_run(job, "beta-table", &out) == RESINT_OK);
  EXPECT(out && strstr(out, "\"zero_below_m_positive_from_m\": true"));
  resint_string_free(out);
  out = NULL;
  EXPECT(resint_run(job, "betti", &out) == RESINT_ERR_PARSE);
  resint_string_free(out);
  resint_job_free(job);
  out = NULL;

  EXPECT(resint_beta(2, 2, &out) == RESINT_OK);
  EXPECT(out && strcmp(out, "2") == 0);
  resint_string_free(out);
  out = NULL;
  EXPECT(resint_beta(0, 2, &out) == RESINT_ERR_PARSE);

  EXPECT(resint_quotient("Fp 32003", "x,y,z", "x*z-y^2, x^2-y*z", "x*z-y^2, x^2-y*z, x*y-z^2", &out) == RESINT_OK);
  EXPECT(out && strstr(out, "\"elimination_cross_check\": true"));
  resint_string_free(out);

  EXPECT(resint_run(NULL, "betti", &out) == RESINT_ERR_NULL);
  EXPECT(resint_job_parse(NULL, &job) == RESINT_ERR_NULL);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
