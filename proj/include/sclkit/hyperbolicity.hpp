#pragma once

#include <cstdint>
#include <optional>

#include "sclkit/graph.hpp"
#include "sclkit/rational.hpp"

namespace sclkit::hypgraph {

struct DeltaOptions {
  int exact_cap = 300;          // full quadruple scan up to this many vertices
  long long samples = 2000000;  // sampled quadruples beyond the cap
  uint64_t seed = 0;
};

struct DeltaResult {
  // Four-point condition, doubled to stay integral: max over quadruples of
  // (largest pairing sum) - (second largest pairing sum). delta = doubled/2.
  int doubled = 0;
  bool exact = true;
  long long quadruples_scanned = 0;
  Rational delta() const { return Rational(doubled, 2); }
  int delta_int() const { return (doubled + 1) / 2; }  // least integer delta
};

// Exact four-point hyperbolicity constant for n <= exact_cap (all unordered
// quadruples); a sampled lower estimate beyond, flagged exact = false.
DeltaResult hyperbolicity_delta(const FiniteMetricGraph& g, DeltaOptions opts = {});

struct BottleneckOptions {
  int exact_cap = 4000;    // exhaustive root scan up to this many vertices
  int sample_roots = 256;  // roots scanned beyond the cap
  uint64_t seed = 0;
  int max_delta = 4096;  // safety stop
};

struct BottleneckResult {
  int delta = 0;
  bool exact = true;
};

// Least Delta such that for every vertex pair (x, y), deleting the closed
// Delta-neighborhood of any vertex of the canonical geodesic lying at distance
// > Delta from both endpoints disconnects x from y. Trees give 0. Feasibility
// is monotone in Delta, so the search ascends from 0.
BottleneckResult bottleneck_constant(const FiniteMetricGraph& g, BottleneckOptions opts = {});

}  // namespace sclkit::hypgraph
