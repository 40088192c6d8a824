// Named verification suites for the CLI and the acceptance battery.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fflog/extended.hpp"

namespace fflog {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// name in {identities, carlitz_e2e, rank2_smallxi}
SuiteReport run_suite(const std::string& name);

// the full acceptance battery, one line per criterion
std::vector<CheckLine> acceptance_criteria();

}  // namespace fflog
