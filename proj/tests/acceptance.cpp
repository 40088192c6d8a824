// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "fflog/suites.hpp"

int main() {
  auto checks = fflog::acceptance_criteria();
  int failures = 0;
  for (const auto& c : checks) {
    std::printf("%-4s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", (int)checks.size() - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
