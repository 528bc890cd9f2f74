#pragma once

#include <cstdint>
#include <random>

#include "sclkit/graph.hpp"

namespace sclkit::hypgraph {

struct QuasiTreeParams {
  int n = 200;            // vertices
  int extra_edges = 4;    // chords added on top of the spanning tree
  int chord_span = 4;     // max tree distance between chord endpoints
  int attach_window = 0;  // 0: attach anywhere earlier (shallow); w>0: within
                          // the last w vertices (w=1 gives a path)
};

// Random tree: vertex i attaches to a uniformly random earlier vertex (or one
// of the last `attach_window` when set).
FiniteMetricGraph random_tree(std::mt19937_64& rng, int n, int attach_window = 0);

// Random tree plus `extra_edges` chords whose endpoints are at tree distance
// in [2, chord_span]. The result is a quasi-tree with bottleneck constant
// controlled by the span.
FiniteMetricGraph random_quasi_tree(std::mt19937_64& rng, const QuasiTreeParams& params);

}  // namespace sclkit::hypgraph
