#include <cstdlib>
#include <cstring>
#include <iostream>

#include "soltes/verify/acceptance.hpp"

int main(int argc, char** argv) {
  soltes::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) options.extended = true;
  }
  if (const char* threads = std::getenv("SOLTES_THREADS")) options.partitions = std::max(1, std::atoi(threads));

  const auto results = soltes::run_acceptance(options, [](const soltes::CriterionResult& r) {
    std::cout << soltes::format_line(r) << std::endl;
  });
  const bool ok = soltes::all_gating_passed(results);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
