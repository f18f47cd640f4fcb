// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "repalg/verify.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = 20260101;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int i = 1; i <= repalg::verify::kCriteria; ++i) {
    const repalg::verify::CheckResult r = repalg::verify::criterion(i, seed);
    std::cout << "criterion " << i << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.name << " (" << r.details
              << ")" << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
