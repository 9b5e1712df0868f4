#pragma once

#include <functional>
#include <string>
#include <vector>

namespace frobenian {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9). Exceptions are caught and reported
/// as failures.
CriterionResult run_criterion(int id);

/// Runs all criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] title (1.2s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace frobenian
