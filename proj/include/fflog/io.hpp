// JSON serialization of the core types, the CLI job description, and the
// job runner producing deterministic structured reports.
#pragma once

#include <json.hpp>

#include "fflog/expr.hpp"
#include "fflog/extended.hpp"

namespace fflog {

using json = nlohmann::json;

json field_to_json(const WorkingField& W);
WFieldPtr field_from_json(const json& j);

json welem_to_json(const WElem& x);
WElem welem_from_json(const WFieldPtr& W, const json& j);

json tate_to_json(const TateElem& x);
TateElem tate_from_json(const WFieldPtr& W, const json& j);

json tatemat_to_json(const TateMat& M);  // carries a field header
TateMat tatemat_from_json(const json& j);

json module_to_json(const DrinfeldModule& E);

json rational_to_json(const RationalTate& r);

// norm q^(-num/den) with the precision it is certified to
json norm_to_json(const WElem& x);

struct JobSpec {
  int p = 2, m = 1, s = 1;
  long long e = 1;
  long long rank = 0;
  std::vector<std::string> kappas;
  bool power_wrap = false;

  std::string op;
  std::string xi;
  long long n = -1;
  long long j = -1;
  long long prec = 200;   // u-digits
  long long tdeg = 40;    // D
  long long order = 10;   // N
  long long degree_bound = 3;  // period-lattice multiplier degree
  std::string policy = "least";
  std::string psi_file;
  std::string out_file;
  std::string suite;
};

struct RunResult {
  json report;
  int exit_code = 0;  // 0 ok/pass, 1 verification failed
};

// Executes one job; throws math_error for mathematical failures and
// math_error(PARSE) for malformed inputs.
RunResult run_job(const JobSpec& job);

}  // namespace fflog
