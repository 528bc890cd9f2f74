#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sclkit/action.hpp"
#include "sclkit/counting.hpp"
#include "sclkit/projection.hpp"

namespace sclkit::actions {

struct PipelineBudgets {
  int conj_radius = 2;       // ball scanned for conjugate axes
  int n_max = 1000;          // homogenization power
  int max_power = 64;        // largest N tried for tau_{g^N} >= R
  long long sample_pairs = 64;
  uint64_t seed = 0;
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error("stage " + stage + ": " + what), stage(std::move(stage)) {}
  std::string stage;
};

// Everything the lower-bound certificate depends on, reported exactly.
struct PipelineResult {
  Rational lower_bound = 0;  // rigorous scl lower bound when scl_defined
  bool scl_defined = false;  // g in the commutator subgroup
  int N = 1;                 // power with tau_{g^N} >= R
  int xi = 0;
  int tau = 0;
  int R = 0;                 // xi + M
  int M = 0;                 // delta_quasi_tree + 1
  int delta_quasi_tree = 1;  // tree backends: bottleneck 0, floored to 1
  qm::RationalInterval homogenized_per_g{0, 0};  // report.homogenized scaled by 1/N
  qm::QMReport report;       // for g^N and the counting qm on its axis
};

// classify -> wwpd xi -> bounded power N -> axis of g^N -> counting qm on the
// axis period -> homogenize -> Bavard. Tree backends skip promotion (they are
// already quasi-trees with bottleneck constant 0). Stage failures name the
// stage. lower_bound = max(interval lo, 0) / (2 * 12 * N); elements outside
// the commutator subgroup get scl_defined = false (scl is undefined for them)
// with the qm data still reported.
PipelineResult scl_pipeline(const GraphAction& act, const ReducedWord& g,
                            const PipelineBudgets& budgets = {});

}  // namespace sclkit::actions
