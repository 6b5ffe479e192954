// Runs the full verification battery and prints one line per criterion.
#include <cstring>
#include <iostream>

#include "echreeb/acceptance.hpp"

int main(int argc, char** argv) {
  echreeb::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--perturb-rotation") == 0 && i + 1 < argc) {
      opts.rotation_shift = std::atof(argv[++i]);
    }
  }
  const auto results = echreeb::run_acceptance(opts);
  echreeb::print_results(std::cout, results);
  const bool ok = echreeb::all_pass(results);
  std::cout << (ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}
