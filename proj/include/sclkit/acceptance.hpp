#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sclkit::accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The ten release criteria, run in order. Deterministic for a fixed seed;
// every randomized draw inside derives from it.
std::vector<CriterionResult> run_all(uint64_t seed = 0);

// One PASS/FAIL line per criterion plus a footer with the total.
std::string format_table(const std::vector<CriterionResult>& rows);

}  // namespace sclkit::accept
