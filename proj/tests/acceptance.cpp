// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "frobenian/acceptance.hpp"

int main() {
  int failed = 0;
  frobenian::run_acceptance([&](const frobenian::CriterionResult& r) {
    std::printf("%s\n", frobenian::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d/%d criteria passed\n", frobenian::kCriterionCount - failed, frobenian::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
