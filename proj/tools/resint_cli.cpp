// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "resint/resint.h"

namespace {

struct Common {
  std::string job_path;
  std::string json_path;
  std::string field, order;
  int budget = 12;
  std::optional<int> max_degree;
  std::map<std::string, std::string> args;
};

int run(const std::string& command, const Common& c) {
  resint_job* job = nullptr;
  resint_status st = c.job_path.empty() ? resint_job_new(&job) : resint_job_load(c.job_path.c_str(), &job);
  if (st != RESINT_OK) {
    std::cerr << "error: " << resint_last_error() << "\n";
    return static_cast<int>(st);
  }
  auto set = [&](const std::string& k, const std::string& v) {
    if (st != RESINT_OK) return;
    st = resint_job_set_option(job, k.c_str(), v.c_str());
  };
  if (!c.field.empty()) set("field", c.field);
  if (!c.order.empty()) set("order", c.order);
  set("budget", std::to_string(c.budget));
  if (c.max_degree) set("max-degree", std::to_string(*c.max_degree));
  for (const auto& [k, v] : c.args) set(k, v);
  if (st != RESINT_OK) {
    std::cerr << "error: " << resint_last_error() << "\n";
    resint_job_free(job);
    return static_cast<int>(st);
  }

  char* out = nullptr;
  st = resint_run(job, command.c_str(), &out);
  resint_job_free(job);
  const std::string text = out ? out : "";
  resint_string_free(out);
  if (st != RESINT_OK) std::cerr << "error (" << resint_status_name(st) << "): " << resint_last_error() << "\n";

  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << c.json_path << "\n";
      return 1;
    }
    f << text;
    auto j = nlohmann::ordered_json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.contains("table")) std::cout << j["table"].get<std::string>();
  } else {
    auto j = nlohmann::ordered_json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.contains("table") && j["table"].is_string())
      std::cout << j["table"].get<std::string>();
    else if (!j.is_discarded() && j.contains("betti"))
      std::cout << j["betti"]["table"].get<std::string>();
    else
      std::cout << text;
  }
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resint: exact checks for residual intersections"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Common c;
  app.add_option("--json", c.json_path, "write the JSON report to this file");
  app.add_option("--field", c.field, "Q or Fp <prime> (overrides the job)");
  app.add_option("--order", c.order, "degrevlex, deglex or lex");
  app.add_option("--budget", c.budget, "degree horizon of truncated comparisons")->capture_default_str();
  app.add_option("--max-degree", c.max_degree, "abort Gröbner runs past this S-pair degree");

  struct Sub {
    const char* name;
    const char* help;
    bool job_required;
  };
  const Sub subs[] = {
      {"quotient", "J = a : I", true},
      {"betti", "graded Betti table of R/I", true},
      {"koszul-depths", "depths of Koszul homology and cycles of I", true},
      {"check-conditions", "SD_k, SDC_k, SCM, G_s and G-_s for I", true},
      {"residual", "residual data, regularity bound and CM conclusion", true},
      {"canonical-check", "canonical module Hilbert series comparison", true},
      {"en", "Eagon-Northcott pipeline for height-2 perfect I", true},
      {"en-tables", "f(j), n(j) and beta tables", false},
      {"beta-table", "beta_m(t) table", false},
      {"corpus", "run the built-in examples", false},
      {"run", "run the job file's own command line", true},
  };
  std::map<std::string, std::string> opt_text;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    auto* pos = sub->add_option("job", c.job_path, "job file");
    if (s.job_required) pos->required();
    for (const char* k : {"m", "t", "s", "k", "u", "ideal", "a", "I"}) {
      std::string flag = std::string("--") + k;
      if (std::string(k).size() == 1 && std::string(k) != "a" && std::string(k) != "I") flag = std::string("-") + k + "," + flag;
      sub->add_option(flag, opt_text[k], std::string("command argument ") + k);
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (const auto& [k, v] : opt_text)
    if (!v.empty()) c.args[k] = v;
  const std::string name = app.get_subcommands().front()->get_name();
  return run(name == "run" ? "" : name, c);
}
