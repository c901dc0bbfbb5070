#include "resint/resint.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "resint/en.hpp"
#include "resint/error.hpp"
#include "resint/job.hpp"

struct resint_job {
  std::optional<resint::JobSpec> spec;
  resint::RunOptions opts;
};

namespace {

thread_local std::string last_error;

resint_status fail(resint_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
resint_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const resint::ParseError& e) {
    return fail(RESINT_ERR_PARSE, e.what());
  } catch (const resint::ArgumentError& e) {
    return fail(RESINT_ERR_PARSE, e.what());
  } catch (const resint::HypothesisError& e) {
    return fail(RESINT_ERR_HYPOTHESIS, e.what());
  } catch (const resint::BudgetExceeded& e) {
    return fail(RESINT_ERR_BUDGET, e.what());
  } catch (const std::exception& e) {
    return fail(RESINT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RESINT_ERR_INTERNAL, "unknown error");
  }
}

resint_status from_exit(int code) {
  switch (code) {
    case 0: return RESINT_OK;
    case 1: return RESINT_ERR_PARSE;
    case 2: return RESINT_ERR_HYPOTHESIS;
    case 3: return RESINT_ERR_BUDGET;
    default: return RESINT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* resint_version(void) { return "0.1.0"; }

const char* resint_status_name(resint_status s) {
  switch (s) {
    case RESINT_OK: return "ok";
    case RESINT_ERR_PARSE: return "parse error";
    case RESINT_ERR_HYPOTHESIS: return "hypothesis failure";
    case RESINT_ERR_BUDGET: return "budget exceeded";
    case RESINT_ERR_INTERNAL: return "internal error";
    case RESINT_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

const char* resint_last_error(void) { return last_error.c_str(); }

resint_status resint_job_new(resint_job** out) {
  if (!out) return fail(RESINT_ERR_NULL, "out is NULL");
  return guarded([&] {
    *out = new resint_job{};
    return RESINT_OK;
  });
}

resint_status resint_job_parse(const char* text, resint_job** out) {
  if (!text || !out) return fail(RESINT_ERR_NULL, "text or out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto spec = resint::parse_job(text);
    *out = new resint_job{std::move(spec), {}};
    return RESINT_OK;
  });
}

resint_status resint_job_load(const char* path, resint_job** out) {
  if (!path || !out) return fail(RESINT_ERR_NULL, "path or out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto spec = resint::load_job(path);
    *out = new resint_job{std::move(spec), {}};
    return RESINT_OK;
  });
}

void resint_job_free(resint_job* job) { delete job; }

resint_status resint_job_set_option(resint_job* job, const char* key, const char* value) {
  if (!job || !key || !value) return fail(RESINT_ERR_NULL, "job, key or value is NULL");
  return guarded([&] {
    const std::string k = key, v = value;
    if (k == "field") {
      job->opts.field = resint::normalize_field(v);
    } else if (k == "order") {
      resint::parse_monomial_order(v);
      job->opts.order = v;
    } else if (k == "budget" || k == "max-degree") {
      std::size_t used = 0;
      int n = 0;
      try {
        n = std::stoi(v, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != v.size() || v.empty() || n < 0) throw resint::ParseError(k + ": expected a nonnegative integer");
      if (k == "budget") job->opts.budget = n;
      else job->opts.max_degree = n;
    } else {
      job->opts.args[k] = v;
    }
    return RESINT_OK;
  });
}

resint_status resint_run(const resint_job* job, const char* command, char** json_out) {
  if (!job || !json_out) return fail(RESINT_ERR_NULL, "job or json_out is NULL");
  *json_out = nullptr;
  return guarded([&] {
    auto res = resint::run_job(command ? command : "", job->spec, job->opts);
    *json_out = dup(res.report.dump(2) + "\n");
    if (res.exit_code != 0 && res.report.contains("message")) last_error = res.report["message"].get<std::string>();
    return from_exit(res.exit_code);
  });
}

resint_status resint_quotient(const char* field, const char* variables, const char* a, const char* I, char** json_out) {
  if (!field || !variables || !a || !I || !json_out) return fail(RESINT_ERR_NULL, "NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    std::string text = std::string("field ") + field + "\nring " + variables + "\nideal a = " + a + "\nideal I = " + I + "\n";
    auto spec = resint::parse_job(text);
    auto res = resint::run_job("quotient", spec, {});
    *json_out = dup(res.report.dump(2) + "\n");
    if (res.exit_code != 0 && res.report.contains("message")) last_error = res.report["message"].get<std::string>();
    return from_exit(res.exit_code);
  });
}

resint_status resint_beta(int m, int t, char** decimal_out) {
  if (!decimal_out) return fail(RESINT_ERR_NULL, "decimal_out is NULL");
  *decimal_out = nullptr;
  return guarded([&] {
    *decimal_out = dup(resint::beta(m, t).get_str());
    return RESINT_OK;
  });
}

void resint_string_free(char* s) { std::free(s); }

}  // extern "C"
