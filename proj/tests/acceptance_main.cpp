// One line per criterion; exit status is nonzero when any criterion fails.

#include "poskit/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main() {
  poskit::AcceptanceOptions opt;
  if (const char* env = std::getenv("POSKIT_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
  int failed = 0;
  for (const auto& r : poskit::run_acceptance(opt)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " C" << r.id << " " << r.name << " [" << r.group << "] " << r.detail
              << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
