#ifndef RESINT_JOB_HPP
#define RESINT_JOB_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace resint {

using Json = nlohmann::ordered_json;

/// Parsed job file. Line grammar:
///   field Q | field Fp <p>
///   ring x,y,z
///   order degrevlex|deglex|lex        (optional)
///   weights 1,1,2                     (optional)
///   ideal NAME = g1, g2, ...
///   command NAME [key=value ...]      (optional, at most one)
/// Blank lines and text after '#' are ignored.
struct JobSpec {
  std::string field = "Fp 32003";
  std::vector<std::string> variables;
  std::vector<int> weights;
  std::string order = "degrevlex";
  std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
  std::string command;
  std::map<std::string, std::string> args;
};

/// Throws ParseError naming the line.
JobSpec parse_job(const std::string& text);
JobSpec load_job(const std::string& path);

struct RunOptions {
  std::optional<std::string> field;   ///< overrides the job's field
  std::optional<std::string> order;
  int budget = 12;                    ///< degree horizon of truncated comparisons
  std::optional<int> max_degree;      ///< Gröbner S-pair degree cap
  std::map<std::string, std::string> args;  ///< override the job's command args
};

struct RunResult {
  int exit_code = 0;   ///< 0 ok, 1 parse/argument error, 2 hypothesis failure, 3 budget, 4 internal
  Json report;
};

/// Commands: quotient, betti, koszul-depths, check-conditions, residual,
/// canonical-check, en, en-tables, beta-table, corpus. An empty command
/// falls back to the job's command line. Never throws.
RunResult run_job(const std::string& command, const std::optional<JobSpec>& job, const RunOptions& opts);

/// "Q", "Fp 32003", "Fp32003", "F_32003" or a bare prime.
std::string normalize_field(const std::string& text);

}  // namespace resint

#endif
