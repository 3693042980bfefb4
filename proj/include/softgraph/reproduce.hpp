#pragma once

#include <string>
#include <vector>

namespace softgraph {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;  // newline separated findings
  double seconds = 0.0;
};

// The full reproduction suite; deterministic output independent of the
// thread count. Names are stable identifiers used by the test suite.
std::vector<CheckResult> run_all_checks(const std::string& data_dir, int threads = 0);

std::string checks_summary(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace softgraph
