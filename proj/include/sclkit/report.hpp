#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sclkit::cli {

uint64_t fnv1a(const std::string& data);

// Deterministic run report: identical inputs + seed give byte-identical text
// and json output. Timing never enters either rendering; callers print it to
// stderr so stdout stays reproducible.
struct RunReport {
  std::string subcommand;
  uint64_t inputs_digest = 0;
  uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> constants;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<std::pair<std::string, std::string>> verdicts;
  double timing_ms = 0;  // stderr only

  void add_constant(const std::string& key, const std::string& value);
  void add_result(const std::string& key, const std::string& value);
  void add_verdict(const std::string& key, const std::string& value);

  std::string text() const;
  std::string json() const;  // same keys, machine-readable
};

}  // namespace sclkit::cli
