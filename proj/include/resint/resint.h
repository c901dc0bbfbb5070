#ifndef RESINT_H
#define RESINT_H

/* C interface to the residual intersection toolkit. Handles are opaque;
   every call returns a status code and the message of the last failure on
   the calling thread is available from resint_last_error(). Strings handed
   out by the library are freed with resint_string_free(). */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum resint_status {
  RESINT_OK = 0,
  RESINT_ERR_PARSE = 1,       /* malformed job, polynomial or argument */
  RESINT_ERR_HYPOTHESIS = 2,  /* a precondition failed; a report is still produced */
  RESINT_ERR_BUDGET = 3,      /* degree or pair budget exceeded */
  RESINT_ERR_INTERNAL = 4,
  RESINT_ERR_NULL = 5         /* a required pointer was NULL */
} resint_status;

typedef struct resint_job resint_job;

const char* resint_version(void);
const char* resint_status_name(resint_status s);
const char* resint_last_error(void);

/* An empty job, for commands that need no ring (beta-table, en-tables, corpus). */
resint_status resint_job_new(resint_job** out);
resint_status resint_job_parse(const char* text, resint_job** out);
resint_status resint_job_load(const char* path, resint_job** out);
void resint_job_free(resint_job* job);

/* Keys: "field", "order", "budget", "max-degree"; anything else is passed
   to the command as key=value (m, t, s, k, u, ideal, a, I). */
resint_status resint_job_set_option(resint_job* job, const char* key, const char* value);

/* Runs a command ("" or NULL: the job's own command line) and returns the
   JSON report in *json_out, also on hypothesis and budget failures. */
resint_status resint_run(const resint_job* job, const char* command, char** json_out);

/* Convenience: Ideal quotient a : I as JSON, ideals given as comma-separated text. */
resint_status resint_quotient(const char* field, const char* variables, const char* a, const char* I, char** json_out);

resint_status resint_beta(int m, int t, char** decimal_out);

void resint_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
