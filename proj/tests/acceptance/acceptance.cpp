#include <cstdlib>
#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = turaev::suite::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 0);
  bool all = true;
  for (const auto& r : turaev::suite::run_all(seed)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " -- " << r.detail
              << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
