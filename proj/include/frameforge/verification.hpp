#pragma once

#include <string>
#include <vector>

namespace frameforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Registered end-to-end checks, in their canonical order.
const std::vector<std::string>& verification_check_names();

CheckResult run_verification_check(const std::string& name);

// "all" (or empty) runs every registered check in order.
std::vector<CheckResult> run_verification_checks(const std::string& selector = "all");

}  // namespace frameforge
