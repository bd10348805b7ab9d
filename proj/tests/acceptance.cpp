// One line per acceptance criterion; details for failures only.
#include <cstdio>
#include <iostream>

#include "skewalg/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= skewalg::verify::kCriterionCount; ++id) {
    const auto r = skewalg::verify::run_criterion(id);
    std::printf("criterion %2d: %s  %-45s %8.3f s (limit %g s)\n", id, r.passed() ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.limit_seconds);
    if (!r.passed()) {
      ++failed;
      std::cout << skewalg::verify::detail_lines(r);
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", skewalg::verify::kCriterionCount - failed,
              skewalg::verify::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
