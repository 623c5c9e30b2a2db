#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace cavity::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct ValidationOptions {
  // Swap the recursion's hopping factor for a deliberately wrong one to
  // demonstrate that the rpm_oracle check localizes the failing depth.
  bool inject_hopping_fault = false;
};

std::vector<std::string> all_check_names();

CheckResult run_check(const std::string& name, const ValidationOptions& options);

}  // namespace cavity::cli
