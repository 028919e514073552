#include <cstdio>
#include <iostream>

#include "fpd/verify.hpp"

int main() {
  bool ok = true;
  fpd::run_verification(fpd::VerifyMode::Full, [&](const fpd::CriterionResult& r) {
    ok = ok && r.passed;
    std::printf("%s  criterion %d  %s (%.2f s): %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  return ok ? 0 : 1;
}
